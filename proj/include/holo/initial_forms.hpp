#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holo/graded_lie.hpp"
#include "holo/magnus.hpp"
#include "holo/presentation.hpp"
#include "holo/series.hpp"

namespace holo {

struct CapExceeded : std::runtime_error {
  int relator;  // 1-based index of the offending relator
  CapExceeded(int relator_, int cap)
      : std::runtime_error("relator " + std::to_string(relator_) +
                           " has weight exceeding the cap " + std::to_string(cap)),
        relator(relator_) {}
};

/// Initial-form presentation L(G;k) = lie(x) / ideal(ini(r_1),...):
/// all generators in degree 1, one homogeneous relation per relator.
inline GradedLiePresentation initial_forms_presentation(const GroupPresentation& p,
                                                        int cap) {
  const int n = p.generator_count();
  FreeLie lie(n);
  GradedLiePresentation out;
  out.generators = n;
  for (int k = 0; k < p.relator_count(); ++k) {
    if (p.relators[k].is_identity())
      throw std::invalid_argument("initial forms: relator " + std::to_string(k + 1) +
                                  " is the identity");
    WeightResult w = weight_and_initial_form(p.relators[k], lie, cap);
    if (w.exceeds_cap) throw CapExceeded(k + 1, cap);
    out.relations.push_back(std::move(w.initial_form));
  }
  return out;
}

/// Mildness report: the combinatorial leading-word test (sufficient) and
/// the finite-cap Hilbert series criterion
/// Hilb(U(L)) = (1 - nt + sum t^{w(r_i)})^{-1}.
struct MildnessReport {
  std::vector<int> weights;               // w(r_i)
  std::vector<Mono> leading_words;        // highest monomial of i(ini(r_i))
  bool combinatorial_pass = false;
  std::string combinatorial_failure;      // empty on pass
  bool hilbert_pass = false;
  int tested_degree = 0;                  // agreement verified through here
  std::vector<int> quotient_dims;         // dim L(G;k)_j for 1 <= j <= cap
};

/// The leading-word order is ordering-sensitive; `order` lists generator
/// indices from highest to lowest precedence (default: input order, so
/// x1 > x2 > ...).
inline MildnessReport mildness_check(const GroupPresentation& p, int cap,
                                     std::vector<int> order = {}) {
  const int n = p.generator_count();
  if (p.relator_count() == 0)
    throw std::invalid_argument("mildness check needs at least one relator");
  if (order.empty())
    for (int i = 1; i <= n; ++i) order.push_back(i);
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("generator ordering must list every generator");
  std::vector<int> rank(n + 1, 0);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  FreeLie lie(n);
  GradedLiePresentation forms = initial_forms_presentation(p, cap);
  MildnessReport out;

  // rank-translated lexicographic order; higher precedence letters first
  auto ranked_less = [&](const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (rank[a[i]] != rank[b[i]]) return rank[a[i]] > rank[b[i]];
    }
    return a.size() > b.size();
  };

  for (int k = 0; k < p.relator_count(); ++k) {
    const LieElement& ini = forms.relations[k];
    out.weights.push_back(*ini.homogeneous_degree());
    TensorSeries t = lie.tensor_embed(ini, *ini.homogeneous_degree());
    Mono best;
    bool have = false;
    for (const auto& [m, c] : t.terms())
      if (!have || ranked_less(best, m)) {
        best = m;
        have = true;
      }
    out.leading_words.push_back(best);
  }

  // Anick's conditions: nonzero words, no submonomial containment
  // (equal words count as containment), no overlaps
  out.combinatorial_pass = true;
  auto fail = [&](const std::string& msg) {
    out.combinatorial_pass = false;
    if (out.combinatorial_failure.empty()) out.combinatorial_failure = msg;
  };
  const auto& lw = out.leading_words;
  for (std::size_t i = 0; i < lw.size() && out.combinatorial_pass; ++i)
    if (lw[i].empty()) fail("leading word " + std::to_string(i + 1) + " is zero");
  for (std::size_t i = 0; i < lw.size(); ++i)
    for (std::size_t j = 0; j < lw.size(); ++j) {
      if (i == j) continue;
      if (lw[j].find(lw[i]) != Mono::npos)
        fail("leading word " + std::to_string(i + 1) + " is a submonomial of " +
             std::to_string(j + 1));
    }
  for (std::size_t i = 0; i < lw.size(); ++i)
    for (std::size_t j = 0; j < lw.size(); ++j) {
      // a proper nonempty suffix of w_i equal to a proper nonempty prefix of w_j
      for (std::size_t len = 1; len < lw[i].size() && len < lw[j].size(); ++len)
        if (lw[i].compare(lw[i].size() - len, len, lw[j], 0, len) == 0)
          fail("leading words " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
               " overlap");
    }

  // Hilbert criterion at finite cap
  GradedLieAlgebra quotient(forms, cap);
  out.quotient_dims = quotient.dims();
  RationalSeries lhs = pbw_series(quotient.dims(), cap);
  RationalSeries target(cap);
  target[0] = 1;
  if (cap >= 1) target[1] = -n;
  for (int w : out.weights)
    if (w <= cap) target[w] += 1;
  RationalSeries rhs = series_inverse(target);
  out.hilbert_pass = lhs == rhs;
  out.tested_degree = cap;
  return out;
}

/// Closed-form LCS rank of a one-relator group on n generators with
/// relator weight e (Labute).
inline Z labute_phi(long n, long e, long k) {
  if (n < 2 || e < 1 || k < 1) throw std::out_of_range("labute_phi: parameter range");
  Q total = 0;
  for (long d : divisors(k)) {
    Q inner = 0;
    for (long i = 0; i * e <= d; ++i) {
      Z np = 1;
      for (long j = 0; j < d - e * i; ++j) np *= n;
      Q term = Q(d, d + i - e * i) * Q(binomial(d + i - i * e, i)) * Q(np);
      if (i % 2) term = -term;
      inner += term;
    }
    inner *= moebius(k / d);
    total += inner;
  }
  total /= k;
  if (!is_integer(total)) throw std::logic_error("labute_phi did not produce an integer");
  return q_num(total);
}

/// Weight, graded-formality verdict, holonomy shape, U(h) Hilbert
/// series, and L(G) dimensions for a one-relator presentation.
struct OneRelatorReport {
  int weight = 0;
  bool graded_formal = false;
  GradedLiePresentation holonomy;       // per the one-relator classification
  RationalSeries uh_series{0};          // three cases by weight
  std::vector<int> lcs_dims;            // dim L(G)_k = LCS ranks, 1..cap
  std::vector<Z> labute_dims;           // closed-form counterpart
  std::optional<std::pair<Z, Z>> degree_weight_discrepancy;  // (phibar_w, phi_w)
};

inline OneRelatorReport onerelator_report(const GroupPresentation& p, int cap) {
  if (p.relator_count() != 1)
    throw std::invalid_argument("one-relator report needs exactly one relator");
  const int n = p.generator_count();
  FreeLie lie(n);
  WeightResult w = weight_and_initial_form(p.relators[0], lie, cap);
  if (w.exceeds_cap) throw CapExceeded(1, cap);

  OneRelatorReport out;
  out.weight = w.weight;
  out.graded_formal = w.weight <= 2;

  RationalSeries target(cap);
  target[0] = 1;
  if (w.weight == 1) {
    out.holonomy.generators = n - 1;
    if (cap >= 1) target[1] = -(n - 1);
  } else if (w.weight == 2) {
    out.holonomy.generators = n;
    out.holonomy.relations.push_back(w.initial_form);
    if (cap >= 1) target[1] = -n;
    if (cap >= 2) target[2] = 1;
  } else {
    out.holonomy.generators = n;
    if (cap >= 1) target[1] = -n;
  }
  out.uh_series = series_inverse(target);

  GradedLieAlgebra l(initial_forms_presentation(p, cap), cap);
  out.lcs_dims = l.dims();
  for (int k = 1; k <= cap; ++k) out.labute_dims.push_back(labute_phi(n, w.weight, k));
  if (w.weight >= 3 && w.weight <= cap) {
    Z phibar = lie.witt_dimension(w.weight);  // holonomy algebra is free
    out.degree_weight_discrepancy = {phibar, Z(out.lcs_dims[w.weight - 1])};
  }
  return out;
}

}  // namespace holo

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "holo/lie.hpp"
#include "holo/matrix.hpp"
#include "holo/tensor.hpp"
#include "holo/word.hpp"

namespace holo {

/// Classical Magnus expansion M(w), truncated at `cap`:
/// M(x_i) = 1 + x_i, M(x_i^-1) = 1 - x_i + x_i^2 - ...
inline TensorSeries magnus_free(const Word& w, int alphabet, int cap) {
  TensorSeries result = TensorSeries::one(alphabet, cap);
  for (const Word::Run& r : w.runs()) {
    TensorSeries letter(alphabet, cap);
    letter.set(Mono{}, 1);
    Mono x = mono_of({r.gen});
    Mono power;
    for (int k = 1; k <= cap; ++k) {
      power += x;
      letter.set(power, r.exp < 0 ? Q((k % 2) ? -1 : 1) : Q(1));
      if (r.exp > 0) break;  // M(x_i) is just 1 + x_i
    }
    long count = r.exp < 0 ? -r.exp : r.exp;
    for (long i = 0; i < count; ++i) result = result * letter;
  }
  return result;
}

inline TensorSeries magnus_free(const Word& w, int cap) {
  return magnus_free(w, std::max(w.max_generator(), 1), cap);
}

/// Magnus expansion of a finitely generated group: T(pi) applied to
/// M(w), where pi is given by the b x n matrix `a` over the chosen
/// homology basis (column s holds the class of x_s).
inline TensorSeries group_magnus(const Word& w, const QMatrix& a, int cap) {
  const int b = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (w.max_generator() > n)
    throw std::invalid_argument("group_magnus: word uses a generator beyond the matrix");
  TensorSeries m = magnus_free(w, n, cap);
  TensorSeries out(b, cap);
  // push each monomial through the projection, one factor at a time
  for (const auto& [mono, c] : m.terms()) {
    std::map<Mono, Q> acc{{Mono{}, c}};
    for (unsigned char s : mono) {
      std::map<Mono, Q> next;
      for (const auto& [u, cu] : acc) {
        for (int i = 0; i < b; ++i) {
          const Q& f = a(i, s - 1);
          if (f == 0) continue;
          Mono v = u;
          v.push_back(static_cast<unsigned char>(i + 1));
          next[v] += cu * f;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [u, cu] : acc) out.add(u, cu);
  }
  return out;
}

/// Degree-1 part of kappa: kappa(w)_i = sum_s a_{i,s} eps_s(w).
inline std::vector<Q> kappa1(const Word& w, const QMatrix& a) {
  const int b = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  std::vector<Q> out(b);
  for (int s = 1; s <= n; ++s) {
    long e = exponent_sum(w, s);
    if (e == 0) continue;
    for (int i = 0; i < b; ++i) out[i] += a(i, s - 1) * e;
  }
  return out;
}

/// Degree-2 coefficient matrix kappa(w)_{i,j} = sum_{s,t} a_{i,s} a_{j,t}
/// eps_{s,t}(w), defined when the degree-1 part vanishes; antisymmetric.
inline QMatrix kappa2(const Word& w, const QMatrix& a) {
  const int b = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (w.max_generator() > n)
    throw std::invalid_argument("kappa2: word uses a generator beyond the matrix");
  for (const Q& v : kappa1(w, a))
    if (v != 0) throw std::domain_error("kappa2: nonzero linear part");
  // eps_{s,t}(w) from the degree-2 part of M(w)
  TensorSeries m2 = magnus_free(w, n, 2).graded_part(2);
  QMatrix out(b, b);
  for (const auto& [mono, c] : m2.terms()) {
    int s = mono[0], t = mono[1];
    for (int i = 0; i < b; ++i) {
      const Q& ai = a(i, s - 1);
      if (ai == 0) continue;
      for (int j = 0; j < b; ++j) {
        const Q& aj = a(j, t - 1);
        if (aj == 0) continue;
        out(i, j) += ai * aj * c;
      }
    }
  }
  return out;
}

struct WeightResult {
  bool exceeds_cap = false;
  int weight = 0;             // valid when !exceeds_cap
  LieElement initial_form;    // valid when !exceeds_cap
};

/// Weight and initial form of a nontrivial word: the smallest degree
/// with a nonzero Magnus coefficient, and the Dynkin projection (scaled
/// by 1/weight) of that homogeneous part, in Lyndon coordinates. The
/// result is verified by re-embedding; failure means the lowest part is
/// not primitive, which cannot happen for group elements.
inline WeightResult weight_and_initial_form(const Word& w, const FreeLie& lie, int cap) {
  if (w.is_identity())
    throw std::invalid_argument("weight_and_initial_form: identity word");
  if (cap < 1) throw std::out_of_range("cap must be >= 1");
  TensorSeries m = magnus_free(w, lie.alphabet(), cap);
  m.add(Mono{}, -1);
  int weight = m.min_degree();
  if (weight < 0) return {true, 0, LieElement{lie.alphabet(), {}}};
  TensorSeries lowest = m.graded_part(weight);
  TensorSeries proj = lie.dynkin(lowest);
  proj *= Q(1, weight);
  LieElement ini = lie.lyndon_decompose(proj);
  if (!(lie.tensor_embed(ini, weight) == lowest))
    throw std::domain_error("initial form is not primitive");
  return {false, weight, std::move(ini)};
}

inline WeightResult weight_and_initial_form(const Word& w, int cap = 8) {
  FreeLie lie(std::max(w.max_generator(), 1));
  return weight_and_initial_form(w, lie, cap);
}

}  // namespace holo

#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "holo/initial_forms.hpp"
#include "holo/presentation.hpp"
#include "holo/series.hpp"

namespace holo {

/// Seifert invariants of an orientable Seifert fibered space over an
/// orientable base: genus g, obstruction b, exceptional pairs (alpha, beta).
struct SeifertInvariants {
  long genus = 0;
  long b = 0;
  std::vector<std::pair<long, long>> fibers;  // coprime, alpha >= 2

  void check() const {
    if (genus < 0) throw std::invalid_argument("seifert: genus must be >= 0");
    for (auto [alpha, beta] : fibers) {
      if (alpha < 2) throw std::invalid_argument("seifert: alpha must be >= 2");
      if (std::gcd(alpha, beta) != 1)
        throw std::invalid_argument("seifert: (alpha, beta) must be coprime");
    }
  }
};

struct SeifertData {
  GroupPresentation presentation;
  Q euler;  // e = -b - sum beta_i / alpha_i
};

/// Standard presentation of the fundamental group: generators
/// x_1,y_1,...,x_g,y_g,z_1,...,z_s,h; relators are the centrality of h
/// (one commutator per generator, in listing order), the long surface
/// relation, and the exceptional-fiber relations z_i^alpha h^beta.
inline SeifertData seifert_data(const SeifertInvariants& s) {
  s.check();
  const long g = s.genus;
  const long sc = static_cast<long>(s.fibers.size());
  SeifertData out;
  GroupPresentation& p = out.presentation;
  for (long i = 1; i <= g; ++i) {
    p.generator_names.push_back("x" + std::to_string(i));
    p.generator_names.push_back("y" + std::to_string(i));
  }
  for (long i = 1; i <= sc; ++i) p.generator_names.push_back("z" + std::to_string(i));
  p.generator_names.push_back("h");
  const int h = p.generator_count();  // index of h

  for (int i = 1; i < h; ++i)
    p.relators.push_back(commutator(Word::generator(h), Word::generator(i)));
  Word longrel;
  for (long i = 0; i < g; ++i)
    longrel *= commutator(Word::generator(static_cast<int>(2 * i + 1)),
                          Word::generator(static_cast<int>(2 * i + 2)));
  for (long i = 1; i <= sc; ++i) longrel *= Word::generator(static_cast<int>(2 * g + i));
  longrel *= Word::generator(h, -s.b);
  p.relators.push_back(longrel);
  for (long i = 1; i <= sc; ++i) {
    auto [alpha, beta] = s.fibers[i - 1];
    p.relators.push_back(Word::generator(static_cast<int>(2 * g + i), alpha) *
                         Word::generator(h, beta));
  }

  out.euler = Q(-s.b);
  for (auto [alpha, beta] : s.fibers) out.euler -= Q(beta, alpha);
  return out;
}

/// Closed-form rank tables, branching on e = 0 versus e != 0.
struct SeifertRanks {
  Q euler;
  std::vector<Z> phi;       // LCS ranks
  std::vector<Z> phibar;    // holonomy ranks
  std::vector<Z> theta;     // Chen ranks
  std::vector<Z> thetabar;  // holonomy Chen ranks
};

inline SeifertRanks closed_form_ranks(const SeifertInvariants& s, int max_degree) {
  s.check();
  if (max_degree < 1) throw std::out_of_range("max degree must be >= 1");
  SeifertRanks out;
  out.euler = seifert_data(s).euler;
  const long g = s.genus;
  const bool ezero = out.euler == 0;

  if (g == 0) {
    // first Betti number is 1 (e = 0) or 0 (e != 0); everything else vanishes
    long b1 = ezero ? 1 : 0;
    for (int k = 1; k <= max_degree; ++k) {
      Z v = (k == 1) ? Z(b1) : Z(0);
      out.phi.push_back(v);
      out.phibar.push_back(v);
      out.theta.push_back(v);
      out.thetabar.push_back(v);
    }
    return out;
  }

  FreeLie free2g(2 * g);
  auto surface_phi = [&](int k) { return labute_phi(2 * g, 2, k); };
  std::vector<Z> chen_surface = chen_rank_formulas(ChenMode::Surface, g, max_degree);
  std::vector<Z> chen_free = chen_rank_formulas(ChenMode::Free, 2 * g, max_degree);

  for (int k = 1; k <= max_degree; ++k) {
    if (ezero) {
      Z v = (k == 1) ? Z(2 * g + 1) : surface_phi(k);
      out.phi.push_back(v);
      out.phibar.push_back(v);
      Z t = (k == 1) ? Z(2 * g + 1) : chen_surface[k - 1];
      out.theta.push_back(t);
      out.thetabar.push_back(t);
    } else {
      out.phibar.push_back(free2g.witt_dimension(k));
      out.thetabar.push_back(chen_free[k - 1]);
      Z v = (k == 1)   ? Z(2 * g)
            : (k == 2) ? Z(g * (2 * g - 1))
                       : surface_phi(k);
      out.phi.push_back(v);
      Z t = (k == 1)   ? Z(2 * g)
            : (k == 2) ? Z(g * (2 * g - 1))
                       : chen_surface[k - 1];
      out.theta.push_back(t);
    }
  }
  return out;
}

/// Closed-form holonomy Lie algebra: for e = 0, lie(2g+1) modulo the
/// surface relation and centrality of h; for e != 0, the free algebra
/// lie(2g). Genus 0 gives a free algebra of rank b_1.
inline GradedLiePresentation holonomy_closed_form(const SeifertInvariants& s) {
  s.check();
  const long g = s.genus;
  Q euler = seifert_data(s).euler;
  GradedLiePresentation out;
  if (euler != 0) {
    out.generators = static_cast<int>(2 * g);
    return out;
  }
  if (g == 0) {
    out.generators = 1;
    return out;
  }
  const int n = static_cast<int>(2 * g + 1);
  out.generators = n;
  LieElement rel{n, {}};
  for (long i = 0; i < g; ++i)
    rel.add(mono_of({static_cast<int>(2 * i + 1), static_cast<int>(2 * i + 2)}), 1);
  out.relations.push_back(rel);
  for (int i = 1; i < n; ++i) {
    LieElement central{n, {}};
    central.add(mono_of({i, n}), 1);
    out.relations.push_back(central);
  }
  return out;
}

}  // namespace holo

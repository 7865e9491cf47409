#pragma once

#include <map>
#include <vector>

#include "holo/rational.hpp"
#include "holo/word.hpp"

namespace holo {

/// An element of the rational group ring of a free group: a finite
/// formal sum of reduced words. Zero coefficients are never stored.
struct GroupRingElement {
  std::map<Word, Q> terms;

  void add(const Word& w, const Q& c) {
    if (c == 0) return;
    Q& v = terms[w];
    v += c;
    if (v == 0) terms.erase(w);
  }

  bool operator==(const GroupRingElement&) const = default;
};

/// Augmentation: sum of coefficients.
inline Q augmentation(const GroupRingElement& e) {
  Q s = 0;
  for (const auto& [w, c] : e.terms) s += c;
  return s;
}

/// Fox derivative of a word: d_i(1)=0, d_i(x_j)=delta_ij,
/// d_i(x_i^-1)=-x_i^-1, and d_i(uv)=d_i(u)e(v)+u d_i(v).
inline GroupRingElement fox_derivative(const Word& w, int i) {
  if (i < 1) throw std::out_of_range("generator index must be >= 1");
  GroupRingElement out;
  Word prefix;
  w.for_each_letter([&](int gen, int sign) {
    if (gen == i) {
      if (sign > 0) {
        out.add(prefix, 1);
      } else {
        Word p = prefix;
        p.append(gen, -1);
        out.add(p, -1);
      }
    }
    prefix.append(gen, sign);
  });
  return out;
}

inline GroupRingElement fox_derivative(const GroupRingElement& e, int i) {
  GroupRingElement out;
  for (const auto& [w, c] : e.terms) {
    GroupRingElement d = fox_derivative(w, i);
    for (const auto& [dw, dc] : d.terms) out.add(dw, c * dc);
  }
  return out;
}

/// Magnus coefficient a_I of x_I in M(w), as the augmented iterated Fox
/// derivative e(d_{i1}(d_{i2}(...d_{ik}(w)))).
inline Q epsilon_seq(const Word& w, const std::vector<int>& index_seq) {
  if (index_seq.empty()) throw std::invalid_argument("epsilon_seq: empty index sequence");
  GroupRingElement e;
  e.add(w, 1);
  for (auto it = index_seq.rbegin(); it != index_seq.rend(); ++it)
    e = fox_derivative(e, *it);
  return augmentation(e);
}

}  // namespace holo

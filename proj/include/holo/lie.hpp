#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holo/rational.hpp"
#include "holo/tensor.hpp"

namespace holo {

/// An element of the free Lie algebra on 1..alphabet, written in the
/// Lyndon-word basis: the key set consists of Lyndon words, each standing
/// for its standard bracketing.
struct LieElement {
  int alphabet = 0;
  std::map<Mono, Q> coeff;

  bool is_zero() const { return coeff.empty(); }

  void add(const Mono& m, const Q& v) {
    if (v == 0) return;
    Q& c = coeff[m];
    c += v;
    if (c == 0) coeff.erase(m);
  }

  LieElement& operator+=(const LieElement& o) {
    for (const auto& [m, c] : o.coeff) add(m, c);
    return *this;
  }

  LieElement& operator-=(const LieElement& o) {
    for (const auto& [m, c] : o.coeff) add(m, -c);
    return *this;
  }

  LieElement& operator*=(const Q& s) {
    if (s == 0) {
      coeff.clear();
      return *this;
    }
    for (auto& [m, c] : coeff) c *= s;
    return *this;
  }

  bool operator==(const LieElement&) const = default;

  /// Degree if homogeneous, std::nullopt for 0 or mixed degrees.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : coeff) {
      int k = static_cast<int>(m.size());
      if (!d)
        d = k;
      else if (*d != k)
        return std::nullopt;
    }
    return d;
  }

  static LieElement generator(int alphabet, int i) {
    LieElement e{alphabet, {}};
    e.add(mono_of({i}), 1);
    return e;
  }
};

inline bool is_lyndon(const Mono& w) {
  if (w.empty()) return false;
  // strictly smaller than each of its proper suffixes
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.compare(w.substr(i)) >= 0) return false;
  return true;
}

/// Free Lie algebra context for a fixed alphabet. Caches Lyndon word
/// lists and the tensor expansions of their standard bracketings.
/// Instances are cheap; the caches grow on demand and are not
/// synchronized, so share an instance across threads only read-only.
class FreeLie {
 public:
  explicit FreeLie(int alphabet) : n_(alphabet) {
    if (alphabet < 0 || alphabet > 255) throw std::out_of_range("alphabet size");
  }

  int alphabet() const { return n_; }

  /// dim lie_k(V), the number of Lyndon words of length k.
  Z witt_dimension(int k) const {
    if (k < 1) throw std::out_of_range("degree must be >= 1");
    Z sum = 0;
    for (long d : divisors(k)) {
      Z p = 1;
      for (long i = 0; i < k / d; ++i) p *= n_;
      sum += moebius(d) * p;
    }
    return sum / k;
  }

  /// Lyndon words of length k, lexicographically ordered (Duval).
  const std::vector<Mono>& lyndon_words(int k) const {
    if (k < 1) throw std::out_of_range("degree must be >= 1");
    while (static_cast<int>(words_.size()) < k) {
      int len = static_cast<int>(words_.size()) + 1;
      std::vector<Mono> out;
      if (n_ == 0) {
        words_.push_back(std::move(out));
        continue;
      }
      Mono w{static_cast<unsigned char>(1)};
      while (!w.empty()) {
        if (static_cast<int>(w.size()) == len) out.push_back(w);
        // extend periodically to full length, then increment
        Mono t = w;
        while (static_cast<int>(t.size()) < len) t.push_back(t[t.size() % w.size()]);
        w = t;
        while (!w.empty() && w.back() == static_cast<unsigned char>(n_)) w.pop_back();
        if (!w.empty()) w.back() = static_cast<unsigned char>(w.back() + 1);
      }
      std::sort(out.begin(), out.end());
      words_.push_back(std::move(out));
    }
    return words_[k - 1];
  }

  int lyndon_index(const Mono& w) const {
    const std::vector<Mono>& ws = lyndon_words(static_cast<int>(w.size()));
    auto it = std::lower_bound(ws.begin(), ws.end(), w);
    if (it == ws.end() || *it != w) throw std::invalid_argument("not a Lyndon word");
    return static_cast<int>(it - ws.begin());
  }

  /// Standard factorization w = uv of a Lyndon word of length >= 2:
  /// v is the lexicographically least proper suffix.
  static std::pair<Mono, Mono> standard_factorization(const Mono& w) {
    std::size_t best = 1;
    for (std::size_t i = 2; i < w.size(); ++i)
      if (w.compare(i, Mono::npos, w, best, Mono::npos) < 0) best = i;
    return {w.substr(0, best), w.substr(best)};
  }

  /// Tensor expansion of the standard bracketing P_w of a Lyndon word,
  /// as a sorted (monomial, coefficient) list. Triangular: the first
  /// entry is w itself with coefficient 1.
  const std::vector<std::pair<Mono, Q>>& bracketing(const Mono& w) const {
    auto it = embed_.find(w);
    if (it != embed_.end()) return it->second;
    std::vector<std::pair<Mono, Q>> result;
    if (w.size() == 1) {
      result.emplace_back(w, 1);
    } else {
      auto [u, v] = standard_factorization(w);
      const auto& eu = bracketing(u);
      const auto& ev = bracketing(v);
      std::map<Mono, Q> acc;
      for (const auto& [mu, cu] : eu)
        for (const auto& [mv, cv] : ev) {
          Q p = cu * cv;
          acc[mu + mv] += p;
          acc[mv + mu] -= p;
        }
      for (auto& [m, c] : acc)
        if (c != 0) result.emplace_back(m, std::move(c));
    }
    return embed_.emplace(w, std::move(result)).first->second;
  }

  /// Inclusion lie(V) -> T(V): [v,w] goes to vw - wv.
  TensorSeries tensor_embed(const LieElement& e, int cap) const {
    TensorSeries t(n_, cap);
    for (const auto& [w, c] : e.coeff) {
      if (static_cast<int>(w.size()) > cap)
        throw std::out_of_range("element degree exceeds cap");
      for (const auto& [m, ec] : bracketing(w)) t.add(m, c * ec);
    }
    return t;
  }

  /// Rewrites a tensor lying in the image of lie(V) in Lyndon
  /// coordinates. Throws std::domain_error if the tensor is not a Lie
  /// element (detected by a non-Lyndon minimal monomial or residue).
  LieElement lyndon_decompose(const TensorSeries& t) const {
    return decompose_map({t.terms().begin(), t.terms().end()});
  }

  /// Left-normed Dynkin map on a homogeneous tensor:
  /// x_{i1}...x_{ik} -> [...[[x_{i1},x_{i2}],x_{i3}],...,x_{ik}].
  /// On the embedding of a homogeneous Lie element of degree k this
  /// returns k times the element.
  TensorSeries dynkin(const TensorSeries& t) const {
    TensorSeries out(n_, t.cap());
    for (const auto& [m, c] : t.terms()) {
      if (m.empty()) continue;
      // expansion of the left-normed bracket of the letters of m
      std::map<Mono, Q> acc{{m.substr(0, 1), Q(1)}};
      for (std::size_t i = 1; i < m.size(); ++i) {
        std::map<Mono, Q> next;
        Mono letter = m.substr(i, 1);
        for (const auto& [u, cu] : acc) {
          next[u + letter] += cu;
          next[letter + u] -= cu;
        }
        acc = std::move(next);
      }
      for (const auto& [u, cu] : acc) out.add(u, c * cu);
    }
    return out;
  }

  /// Bracket of two Lyndon basis elements [P_u, P_v], memoized.
  const LieElement& bracket_basis(const Mono& u, const Mono& v) const {
    auto key = std::make_pair(u, v);
    auto it = basis_bracket_.find(key);
    if (it != basis_bracket_.end()) return it->second;
    LieElement out{n_, {}};
    if (u == v) return basis_bracket_.emplace(key, std::move(out)).first->second;
    if (u > v) {
      out = bracket_basis(v, u);
      out *= Q(-1);
      return basis_bracket_.emplace(key, std::move(out)).first->second;
    }
    Mono uv = u + v;
    if (is_lyndon(uv) && standard_factorization(uv).second == v) {
      out.add(uv, 1);  // (u,v) is the standard factorization
    } else {
      std::map<Mono, Q> acc;
      for (const auto& [mu, cu] : bracketing(u))
        for (const auto& [mv, cv] : bracketing(v)) {
          Q p = cu * cv;
          acc[mu + mv] += p;
          acc[mv + mu] -= p;
        }
      out = decompose_map(std::move(acc));
    }
    return basis_bracket_.emplace(key, std::move(out)).first->second;
  }

  LieElement bracket(const LieElement& a, const LieElement& b) const {
    if (a.alphabet != b.alphabet)
      throw std::invalid_argument("bracket: alphabet mismatch");
    LieElement out{n_, {}};
    for (const auto& [u, cu] : a.coeff)
      for (const auto& [v, cv] : b.coeff) {
        LieElement t = bracket_basis(u, v);
        t *= cu * cv;
        out += t;
      }
    return out;
  }

 private:
  LieElement decompose_map(std::map<Mono, Q> work) const {
    for (auto it = work.begin(); it != work.end();)
      it = it->second == 0 ? work.erase(it) : std::next(it);
    // all keys homogeneous of one degree in the bracket use case, but the
    // general scan keeps this safe for mixed input
    LieElement out{n_, {}};
    while (!work.empty()) {
      auto smallest = work.begin();
      int deg = static_cast<int>(smallest->first.size());
      for (auto it = work.begin(); it != work.end(); ++it)
        if (static_cast<int>(it->first.size()) < deg) {
          smallest = it;
          deg = static_cast<int>(it->first.size());
        }
      const Mono w = smallest->first;
      const Q c = smallest->second;
      if (deg == 0 || !is_lyndon(w))
        throw std::domain_error("tensor is not a Lie element");
      for (const auto& [m, ec] : bracketing(w)) {
        Q& a = work[m];
        a -= c * ec;
        if (a == 0) work.erase(m);
      }
      out.add(w, c);
    }
    return out;
  }

  int n_;
  mutable std::deque<std::vector<Mono>> words_;
  mutable std::map<Mono, std::vector<std::pair<Mono, Q>>> embed_;
  mutable std::map<std::pair<Mono, Mono>, LieElement> basis_bracket_;
};

inline std::string lie_str(const LieElement& e, char letter = 'x') {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.coeff) {
    if (!first) os << " + ";
    first = false;
    os << q_str(c) << "*P(" << mono_str(m, letter) << ")";
  }
  return os.str();
}

}  // namespace holo

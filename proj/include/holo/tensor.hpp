#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "holo/rational.hpp"

namespace holo {

/// A tensor monomial x_{i1}...x_{ik}: the byte string of 1-based letter
/// indices. String comparison is lexicographic, which within a fixed
/// degree is the order the Lyndon machinery relies on.
using Mono = std::basic_string<unsigned char>;

inline Mono mono_of(std::initializer_list<int> letters) {
  Mono m;
  for (int l : letters) m.push_back(static_cast<unsigned char>(l));
  return m;
}

/// Noncommutative power series over Q in `alphabet` variables, truncated
/// above degree `cap`. Zero coefficients are never stored.
class TensorSeries {
 public:
  TensorSeries(int alphabet, int cap) : alphabet_(alphabet), cap_(cap) {
    if (alphabet < 0 || alphabet > 255) throw std::out_of_range("alphabet size");
    if (cap < 1) throw std::out_of_range("cap must be >= 1");
  }

  static TensorSeries one(int alphabet, int cap) {
    TensorSeries s(alphabet, cap);
    s.set(Mono{}, 1);
    return s;
  }

  int alphabet() const { return alphabet_; }
  int cap() const { return cap_; }
  const std::map<Mono, Q>& terms() const { return coeff_; }

  Q coeff(const Mono& m) const {
    auto it = coeff_.find(m);
    return it == coeff_.end() ? Q(0) : it->second;
  }

  void set(const Mono& m, Q v) {
    check_mono(m);
    if (v == 0)
      coeff_.erase(m);
    else
      coeff_[m] = std::move(v);
  }

  void add(const Mono& m, const Q& v) {
    if (v == 0) return;
    check_mono(m);
    Q& c = coeff_[m];
    c += v;
    if (c == 0) coeff_.erase(m);
  }

  TensorSeries& operator+=(const TensorSeries& o) {
    for (const auto& [m, c] : o.coeff_) add(m, c);
    return *this;
  }

  TensorSeries& operator-=(const TensorSeries& o) {
    for (const auto& [m, c] : o.coeff_) add(m, -c);
    return *this;
  }

  TensorSeries operator*(const TensorSeries& o) const {
    TensorSeries r(alphabet_, cap_);
    for (const auto& [ma, ca] : coeff_) {
      if (static_cast<int>(ma.size()) > cap_) continue;
      for (const auto& [mb, cb] : o.coeff_) {
        if (static_cast<int>(ma.size() + mb.size()) > cap_) continue;
        r.add(ma + mb, ca * cb);
      }
    }
    return r;
  }

  TensorSeries& operator*=(const Q& s) {
    if (s == 0) {
      coeff_.clear();
      return *this;
    }
    for (auto& [m, c] : coeff_) c *= s;
    return *this;
  }

  bool operator==(const TensorSeries& o) const { return coeff_ == o.coeff_; }

  bool is_zero() const { return coeff_.empty(); }

  /// Smallest degree with a nonzero coefficient, or -1 if zero.
  int min_degree() const {
    int d = -1;
    for (const auto& [m, c] : coeff_) {
      int k = static_cast<int>(m.size());
      if (d < 0 || k < d) d = k;
    }
    return d;
  }

  TensorSeries graded_part(int degree) const {
    TensorSeries r(alphabet_, cap_);
    for (const auto& [m, c] : coeff_)
      if (static_cast<int>(m.size()) == degree) r.coeff_[m] = c;
    return r;
  }

 private:
  void check_mono(const Mono& m) const {
    if (static_cast<int>(m.size()) > cap_)
      throw std::out_of_range("monomial degree exceeds cap");
    for (unsigned char l : m)
      if (l < 1 || static_cast<int>(l) > alphabet_)
        throw std::out_of_range("letter outside alphabet");
  }

  int alphabet_;
  int cap_;
  std::map<Mono, Q> coeff_;
};

/// Multiplicative inverse of a series with constant term 1, by summing
/// the geometric series of (1 - s) up to the cap.
inline TensorSeries series_inverse(const TensorSeries& s) {
  if (s.coeff(Mono{}) != 1)
    throw std::invalid_argument("series_inverse: constant term must be 1");
  TensorSeries tail = s;  // tail = s - 1, has min degree >= 1
  tail.add(Mono{}, -1);
  TensorSeries result = TensorSeries::one(s.alphabet(), s.cap());
  TensorSeries power = TensorSeries::one(s.alphabet(), s.cap());
  for (int k = 1; k <= s.cap(); ++k) {
    power = power * tail;
    power *= Q(-1);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

inline std::string mono_str(const Mono& m, char letter = 'x') {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << '.';
    os << letter << static_cast<int>(m[i]);
  }
  return os.str();
}

inline std::string series_str(const TensorSeries& s, char letter = 'x') {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << q_str(c);
    if (!m.empty()) os << "*" << mono_str(m, letter);
  }
  return os.str();
}

}  // namespace holo

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Univariate power series over Q truncated at degree `cap`:
/// coefficients[k] is the t^k coefficient, 0 <= k <= cap.
struct RationalSeries {
  int cap = 0;
  std::vector<Q> coefficients;

  explicit RationalSeries(int cap_) : cap(cap_), coefficients(cap_ + 1) {
    if (cap_ < 0) throw std::out_of_range("cap must be >= 0");
  }

  static RationalSeries one(int cap) {
    RationalSeries s(cap);
    s.coefficients[0] = 1;
    return s;
  }

  Q& operator[](int k) { return coefficients.at(k); }
  const Q& operator[](int k) const { return coefficients.at(k); }

  bool operator==(const RationalSeries&) const = default;

  RationalSeries operator*(const RationalSeries& o) const {
    RationalSeries r(cap);
    for (int i = 0; i <= cap; ++i) {
      if (coefficients[i] == 0) continue;
      for (int j = 0; i + j <= cap && j <= o.cap; ++j)
        r.coefficients[i + j] += coefficients[i] * o[j];
    }
    return r;
  }

  RationalSeries operator+(const RationalSeries& o) const {
    RationalSeries r(cap);
    for (int i = 0; i <= cap; ++i) r.coefficients[i] = coefficients[i] + o[i];
    return r;
  }

  RationalSeries operator-(const RationalSeries& o) const {
    RationalSeries r(cap);
    for (int i = 0; i <= cap; ++i) r.coefficients[i] = coefficients[i] - o[i];
    return r;
  }

  /// Substitutes -t for t.
  RationalSeries alternate() const {
    RationalSeries r(cap);
    for (int i = 0; i <= cap; ++i)
      r.coefficients[i] = (i % 2) ? -coefficients[i] : coefficients[i];
    return r;
  }
};

/// Multiplicative inverse; requires a unit constant term.
inline RationalSeries series_inverse(const RationalSeries& s) {
  if (s[0] == 0) throw std::invalid_argument("series inverse: zero constant term");
  RationalSeries r(s.cap);
  Q inv0 = Q(1) / s[0];
  r[0] = inv0;
  for (int k = 1; k <= s.cap; ++k) {
    Q acc = 0;
    for (int j = 1; j <= k; ++j) acc += s[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

inline RationalSeries series_from_ints(const std::vector<long>& c, int cap) {
  RationalSeries s(cap);
  for (int i = 0; i <= cap && i < static_cast<int>(c.size()); ++i) s[i] = c[i];
  return s;
}

/// PBW: Hilb(U(g), t) = prod_i (1 - t^i)^(-dims[i-1]) through the cap.
inline RationalSeries pbw_series(const std::vector<Z>& dims, int cap) {
  RationalSeries r = RationalSeries::one(cap);
  for (int i = 1; i <= cap && i <= static_cast<int>(dims.size()); ++i) {
    const Z& d = dims[i - 1];
    if (d < 0) throw std::invalid_argument("pbw_series: negative dimension");
    if (d == 0) continue;
    // (1 - u)^(-d) = sum_k C(k + d - 1, k) u^k with u = t^i
    RationalSeries f(cap);
    Z num = 1, den = 1;
    for (int k = 0; k * i <= cap; ++k) {
      if (k > 0) {
        num *= d + k - 1;
        den *= k;
      }
      f[k * i] = Q(num) / Q(den);
    }
    r = r * f;
  }
  return r;
}

inline RationalSeries pbw_series(const std::vector<int>& dims, int cap) {
  return pbw_series(std::vector<Z>(dims.begin(), dims.end()), cap);
}

struct PbwInversion {
  bool ok = false;
  std::vector<Z> dims;      // valid when ok
  int failed_degree = 0;    // valid when !ok
  Q offending_value;        // the non-integral or negative inferred dim
};

/// Reads graded dimensions off a series assumed to be of PBW type.
/// Fails (with the degree named) if an inferred dimension is negative
/// or non-integral -- the detection mechanism for non-Koszul series.
inline PbwInversion pbw_invert(const RationalSeries& u) {
  if (u[0] != 1) throw std::invalid_argument("pbw_invert: constant term must be 1");
  PbwInversion out;
  RationalSeries partial = RationalSeries::one(u.cap);  // prod over i < k
  for (int k = 1; k <= u.cap; ++k) {
    RationalSeries q = u * series_inverse(partial);
    Q dk = q[k];
    if (!is_integer(dk) || dk < 0) {
      out.failed_degree = k;
      out.offending_value = dk;
      return out;
    }
    out.dims.push_back(q_num(dk));
    std::vector<Z> one_dim(k, Z(0));
    one_dim[k - 1] = q_num(dk);
    partial = partial * pbw_series(one_dim, u.cap);
  }
  out.ok = true;
  return out;
}

struct KoszulReciprocal {
  RationalSeries series;
  std::optional<int> first_negative_degree;
};

/// Candidate Hilbert series of the quadratic dual: g with
/// h(-t) * g(t) = 1 through the cap. A negative coefficient proves the
/// algebra is not Koszul; the first one is flagged.
inline KoszulReciprocal koszul_reciprocal(const RationalSeries& h) {
  if (h[0] != 1) throw std::invalid_argument("koszul_reciprocal: constant term must be 1");
  KoszulReciprocal out{series_inverse(h.alternate()), std::nullopt};
  for (int k = 0; k <= out.series.cap; ++k)
    if (out.series[k] < 0) {
      out.first_negative_degree = k;
      break;
    }
  return out;
}

enum class ChenMode { Free, Surface, OneRelatorComm, OneRelatorNonComm };

/// Closed-form Chen rank tables.
///  Free:              theta_k(F_n) = (k-1) C(n+k-2, k), theta_1 = n
///  Surface:           theta_k(Pi_g) = (k-1) C(2g+k-2, k) - C(2g+k-3, k-2)
///  OneRelatorComm:    coefficients of 1 + nt - (1-nt+t^2)/(1-t)^n
///  OneRelatorNonComm: coefficients of 1 + (n-1)t - (1-(n-1)t)/(1-t)^(n-1)
inline std::vector<Z> chen_rank_formulas(ChenMode mode, long param, int kmax) {
  if (kmax < 1) throw std::out_of_range("k range must be >= 1");
  std::vector<Z> out;
  switch (mode) {
    case ChenMode::Free: {
      long n = param;
      if (n < 1) throw std::invalid_argument("chen: n must be >= 1");
      out.push_back(n);
      for (int k = 2; k <= kmax; ++k) out.push_back(Z(k - 1) * binomial(n + k - 2, k));
      break;
    }
    case ChenMode::Surface: {
      long g = param;
      if (g < 1) throw std::invalid_argument("chen: g must be >= 1");
      out.push_back(2 * g);
      if (kmax >= 2) out.push_back(2 * g * g - g - 1);
      for (int k = 3; k <= kmax; ++k)
        out.push_back(Z(k - 1) * binomial(2 * g + k - 2, k) - binomial(2 * g + k - 3, k - 2));
      break;
    }
    case ChenMode::OneRelatorComm:
    case ChenMode::OneRelatorNonComm: {
      long n = param;
      if (n < 1) throw std::invalid_argument("chen: n must be >= 1");
      long m = mode == ChenMode::OneRelatorComm ? n : n - 1;
      // (1 - mt [+ t^2]) / (1-t)^m
      RationalSeries numer(kmax);
      numer[0] = 1;
      if (kmax >= 1) numer[1] = -m;
      if (mode == ChenMode::OneRelatorComm && kmax >= 2) numer[2] = 1;
      RationalSeries denom(kmax);
      denom[0] = 1;
      if (kmax >= 1) denom[1] = -1;
      RationalSeries pw = RationalSeries::one(kmax);
      for (long i = 0; i < m; ++i) pw = pw * denom;
      RationalSeries frac = numer * series_inverse(pw);
      RationalSeries hilb(kmax);
      hilb[0] = 1;
      if (kmax >= 1) hilb[1] = m;
      hilb = hilb - frac;
      for (int k = 1; k <= kmax; ++k) {
        const Q& c = hilb[k];
        if (!is_integer(c) || c < 0)
          throw std::domain_error("chen series produced a non-integer rank");
        out.push_back(q_num(c));
      }
      break;
    }
  }
  return out;
}

inline std::string series_str(const RationalSeries& s) {
  std::string out;
  for (int k = 0; k <= s.cap; ++k) {
    if (k) out += ", ";
    out += q_str(s[k]);
  }
  return out;
}

}  // namespace holo

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace holo {

/// Exact arbitrary-precision scalars. Rationals are kept canonical
/// (lowest terms, positive denominator) by the backend.
using Z = boost::multiprecision::mpz_int;
using Q = boost::multiprecision::mpq_rational;

inline Z q_num(const Q& q) { return numerator(q); }
inline Z q_den(const Q& q) { return denominator(q); }

inline bool is_integer(const Q& q) { return q_den(q) == 1; }

/// Serializes as "p/q", or just "p" for integers.
inline std::string q_str(const Q& q) { return q.str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Q q_parse(const std::string& s) {
  try {
    Q q(s);
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline Z binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Z r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// Moebius function on positive integers.
inline int moebius(long n) {
  int primes = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace holo

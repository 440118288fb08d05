#ifndef PGIDEAL_NUMERIC_HPP
#define PGIDEAL_NUMERIC_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgideal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n, with n >= 0.
inline Integer binomial(std::int64_t n, std::int64_t k)
{
  if (k < 0 || n < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

inline Integer gcd(Integer a, Integer b)
{
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
  if (a == 0 || b == 0)
    return 0;
  Integer r = a / gcd(a, b) * b;
  return r < 0 ? Integer(-r) : r;
}

inline std::string to_string(const Integer& v) { return v.str(); }

// p/q, or just p when integral
inline std::string to_string(const Rational& v)
{
  if (is_integral(v))
    return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline std::int64_t to_int64(const Integer& v) { return v.convert_to<std::int64_t>(); }

} // namespace pgideal

#endif

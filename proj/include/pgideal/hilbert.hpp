#ifndef PGIDEAL_HILBERT_HPP
#define PGIDEAL_HILBERT_HPP

// Riemann-Roch colengths, normal Hilbert coefficients and p_g-ideal verdicts
// computed from the numerical data of an ideal I = I_Z: Z^2, Z.K, p_g and the
// sequence h1[n] = h^1(O_X(-nZ)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "numeric.hpp"

namespace pgideal {

/// Numerical shadow of an ideal represented by a cycle Z. `h1` holds
/// h1[1..N]; h1[0] is p_g and values past N repeat h1[N].
///
/// Construction validates everything the combinatorics can check:
///   Z^2 < 0, Z^2 + Z.K even, 0 <= h1[n] <= p_g, h1 nonincreasing and convex
///   (from h1[0] = p_g on), constant from n = p_g on, N >= p_g + 1,
///   e1bar >= 0, and colengths positive and strictly increasing.
class NumericalIdealDatum
{
public:
  NumericalIdealDatum(std::int64_t zz, std::int64_t zk, std::int64_t pg,
                      std::vector<std::int64_t> h1, std::string label = {})
    : zz_(zz), zk_(zk), pg_(pg), h1_(std::move(h1)), label_(std::move(label))
  {
    validate();
  }

  std::int64_t zz() const noexcept { return zz_; }
  std::int64_t zk() const noexcept { return zk_; }
  std::int64_t pg() const noexcept { return pg_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::int64_t>& h1_values() const noexcept { return h1_; }

  // h^1(O_X(-nZ)) for any n >= 0
  std::int64_t h1(std::int64_t n) const
  {
    if (n < 0)
      throw DomainError("h1 index must be nonnegative");
    if (n == 0)
      return pg_;
    const auto i = static_cast<std::size_t>(n);
    return i <= h1_.size() ? h1_[i - 1] : h1_.back();
  }

private:
  [[noreturn]] void reject(const std::string& why) const
  {
    throw InconsistentDataError((label_.empty() ? std::string("datum") : "datum '" + label_ + "'") +
                                ": " + why);
  }

  void validate() const
  {
    if (zz_ >= 0)
      reject("Z^2 must be negative");
    if ((zz_ + zk_) % 2 != 0)
      reject("Z^2 + Z.K must be even");
    if (pg_ < 0)
      reject("p_g must be nonnegative");
    if (h1_.empty() || static_cast<std::int64_t>(h1_.size()) < pg_ + 1)
      reject("h1 needs at least p_g + 1 = " + std::to_string(pg_ + 1) + " values");
    if ((zk_ - zz_) < 0)
      reject("e1bar = (Z.K - Z^2)/2 must be nonnegative");

    const auto n_max = static_cast<std::int64_t>(h1_.size());
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const auto v = h1(n);
      if (v < 0 || v > pg_)
        reject("h1[" + std::to_string(n) + "] = " + std::to_string(v) + " outside [0, p_g]");
      if (v > h1(n - 1))
        reject("h1 increases at n = " + std::to_string(n));
    }
    for (std::int64_t n = 0; n + 2 <= n_max + 1; ++n)
      if (h1(n) - h1(n + 1) < h1(n + 1) - h1(n + 2))
        reject("h1 is not convex at n = " + std::to_string(n));
    for (std::int64_t n = pg_; n <= n_max; ++n)
      if (h1(n) != h1(pg_))
        reject("h1 not constant from n = p_g on");

    Integer prev = 0;
    for (std::int64_t n = 1; n <= n_max + 1; ++n) {
      const Integer c = raw_colength(n);
      if (c <= prev)
        reject(n == 1 ? "colength l(A/I) must be at least 1"
                      : "colength not strictly increasing at n = " + std::to_string(n));
      prev = c;
    }
  }

  Integer raw_colength(std::int64_t n) const
  {
    const Integer twice = Integer(n) * n * zz_ + Integer(n) * zk_;
    return -twice / 2 + pg_ - h1(n);
  }

  std::int64_t zz_;
  std::int64_t zk_;
  std::int64_t pg_;
  std::vector<std::int64_t> h1_;
  std::string label_;
};

struct NormalHilbertCoefficients
{
  Integer e0bar;
  Integer e1bar;
  Integer e2bar;

  friend bool operator==(const NormalHilbertCoefficients&, const NormalHilbertCoefficients&) = default;
};

/// l(A / closure(I^n)) = -(n^2 Z^2 + n Z.K)/2 + p_g - h1[n], n >= 1.
inline Integer kato_colength(const NumericalIdealDatum& d, std::int64_t n)
{
  if (n < 1)
    throw DomainError("colength index n must be positive");
  const Integer twice = Integer(n) * n * d.zz() + Integer(n) * d.zk();
  if (twice % 2 != 0)
    throw InconsistentDataError("n^2 Z^2 + n Z.K is odd; parity violated");
  const Integer c = -twice / 2 + d.pg() - d.h1(n);
  if (c < 1)
    throw InconsistentDataError("non-positive colength at n = " + std::to_string(n));
  return c;
}

inline NormalHilbertCoefficients coefficients(const NumericalIdealDatum& d)
{
  if ((d.zk() - d.zz()) % 2 != 0)
    throw InconsistentDataError("Z.K - Z^2 is odd; parity violated");
  return {Integer(-d.zz()), Integer((d.zk() - d.zz()) / 2), Integer(d.pg() - d.h1(d.pg()))};
}

/// P(n) = e0bar C(n+2,2) - e1bar (n+1) + e2bar
inline Integer hilbert_poly_eval(const NormalHilbertCoefficients& c, std::int64_t n)
{
  return c.e0bar * binomial(n + 2, 2) - c.e1bar * (n + 1) + c.e2bar;
}

/// Least n >= 0 with h1[n] = h1[n+1]; at most p_g for valid data.
inline std::int64_t stabilization_index(const NumericalIdealDatum& d)
{
  std::int64_t n = 0;
  while (d.h1(n) != d.h1(n + 1))
    ++n;
  if (n > d.pg())
    throw InternalInconsistencyError("stabilization index exceeds p_g");
  return n;
}

/// epsilon(Z, W) = p_g - h1(Z) - h1(W) + h1(Z + W), which must lie in [0, p_g];
/// when h1(Z) = p_g it must vanish.
inline std::int64_t epsilon(std::int64_t pg, std::int64_t h1_z, std::int64_t h1_w, std::int64_t h1_zw)
{
  for (auto v : {h1_z, h1_w, h1_zw})
    if (v < 0 || v > pg)
      throw InconsistentDataError("h1 value " + std::to_string(v) + " outside [0, p_g]");
  const std::int64_t e = pg - h1_z - h1_w + h1_zw;
  if (e < 0 || e > pg)
    throw InconsistentDataError("epsilon = " + std::to_string(e) + " outside [0, p_g]");
  if ((h1_z == pg || h1_w == pg) && e != 0)
    throw InconsistentDataError("a p_g-cycle summand forces epsilon = 0, got " + std::to_string(e));
  return e;
}

/// epsilon(Z, nZ) read off one datum.
inline std::int64_t epsilon(const NumericalIdealDatum& d, std::int64_t n)
{
  if (n < 1)
    throw DomainError("epsilon multiple n must be positive");
  return epsilon(d.pg(), d.h1(1), d.h1(n), d.h1(n + 1));
}

struct PgIdealVerdict
{
  bool verdict = false;
  bool h1_attains_pg = false;   // h1[1] = p_g
  bool e1_identity = false;     // e1bar = e0bar - l(A/I)
  bool e2_vanishes = false;     // e2bar = 0
};

namespace detail {
inline PgIdealVerdict agree(bool a, bool b, bool c)
{
  if (a != b || b != c)
    throw InternalInconsistencyError("p_g-ideal criteria disagree (h1[1]=p_g: " +
                                     std::string(a ? "yes" : "no") + ", e1 identity: " +
                                     (b ? "yes" : "no") + ", e2=0: " + (c ? "yes" : "no") + ")");
  return {a, a, b, c};
}
} // namespace detail

/// Evaluates the three equivalent p_g-ideal criteria independently and
/// requires them to agree.
inline PgIdealVerdict pg_ideal_test(const NumericalIdealDatum& d)
{
  const auto c = coefficients(d);
  const bool by_h1 = d.h1(1) == d.pg();
  const bool by_e1 = c.e1bar == c.e0bar - kato_colength(d, 1);
  const bool by_e2 = c.e2bar == 0;
  return detail::agree(by_h1, by_e1, by_e2);
}

inline bool pg_additivity_check(std::int64_t pg_total, std::int64_t e2bar,
                                const std::vector<std::int64_t>& component_pgs)
{
  if (pg_total < 0 || e2bar < 0 ||
      std::any_of(component_pgs.begin(), component_pgs.end(), [](auto v) { return v < 0; }))
    throw DomainError("additivity check takes nonnegative values");
  return pg_total == e2bar + std::accumulate(component_pgs.begin(), component_pgs.end(), std::int64_t{0});
}

/// The bigraded Rees algebra R(I, J) is Cohen-Macaulay normal iff both I and J
/// are p_g-ideals.
inline bool multi_rees_verdict(const NumericalIdealDatum& d1, const NumericalIdealDatum& d2)
{
  if (d1.pg() != d2.pg())
    throw DomainError("data come from singularities with different p_g");
  return pg_ideal_test(d1).verdict && pg_ideal_test(d2).verdict;
}

/// Datum of I^n (cycle nZ): Z^2 -> n^2 Z^2, Z.K -> n Z.K, h1'[m] = h1[nm].
inline NumericalIdealDatum power_datum(const NumericalIdealDatum& d, std::int64_t n)
{
  if (n < 1)
    throw DomainError("power must be positive");
  const auto len = std::max<std::int64_t>(
      d.pg() + 1, static_cast<std::int64_t>(d.h1_values().size()) / n + 1);
  std::vector<std::int64_t> h1;
  for (std::int64_t m = 1; m <= len; ++m)
    h1.push_back(d.h1(n * m));
  auto label = d.label().empty() ? std::string() : d.label() + "^" + std::to_string(n);
  return NumericalIdealDatum(n * n * d.zz(), n * d.zk(), d.pg(), std::move(h1), std::move(label));
}

/// Datum of the ideal represented by an anti-nef cycle on a graph, with the
/// analytic data (p_g, h1 sequence) supplied by the caller.
inline NumericalIdealDatum graph_datum(const DualGraph& g, const Cycle& z, std::int64_t pg,
                                       std::vector<std::int64_t> h1, std::string label = {})
{
  if (z.is_zero() || !is_anti_nef(g, z))
    throw DomainError("a represented ideal needs a nonzero anti-nef cycle");
  return NumericalIdealDatum(to_int64(pairing(g, z, z)), to_int64(canonical_degree(g, z)), pg,
                             std::move(h1), std::move(label));
}

/// For a rational graph every anti-nef cycle has h1 = 0 = p_g.
inline NumericalIdealDatum rational_datum(const DualGraph& g, const Cycle& z, std::string label = {})
{
  if (!artin_rational_test(g))
    throw DomainError("graph fails the rationality test; h1 data must be supplied");
  return graph_datum(g, z, 0, {0}, std::move(label));
}

} // namespace pgideal

#endif

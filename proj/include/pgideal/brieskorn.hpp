#ifndef PGIDEAL_BRIESKORN_HPP
#define PGIDEAL_BRIESKORN_HPP

// Enumeration oracles for Brieskorn-Pham hypersurfaces x^p + y^q + z^r.
// Every count here walks a monomial basis of k[x,y,z]/(f) with the x-monic
// rewriting x^p -> -(y^q + z^r), i.e. monomials x^a y^b z^c with a < p.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hilbert.hpp"
#include "numeric.hpp"

namespace pgideal {

/// f = x^p + y^q + z^r with weights making f homogeneous of degree d:
/// w_x p = w_y q = w_z r = d. Default normalization d = lcm(p, q, r).
class BrieskornDescriptor
{
public:
  BrieskornDescriptor(std::int64_t p, std::int64_t q, std::int64_t r) : exponents_{p, q, r}
  {
    for (auto e : exponents_)
      if (e < 2)
        throw DomainError("Brieskorn exponents must be >= 2");
    degree_ = to_int64(lcm(lcm(Integer(p), Integer(q)), Integer(r)));
    for (int i = 0; i < 3; ++i)
      weights_[i] = degree_ / exponents_[i];
  }

  const std::array<std::int64_t, 3>& exponents() const noexcept { return exponents_; }
  const std::array<std::int64_t, 3>& weights() const noexcept { return weights_; }
  std::int64_t degree() const noexcept { return degree_; }

  /// Same hypersurface with every weight (and the degree) multiplied by k.
  BrieskornDescriptor scaled(std::int64_t k) const
  {
    if (k < 1)
      throw DomainError("weight scale must be positive");
    auto b = *this;
    b.degree_ *= k;
    for (auto& w : b.weights_)
      w *= k;
    return b;
  }

private:
  std::array<std::int64_t, 3> exponents_;
  std::array<std::int64_t, 3> weights_{};
  std::int64_t degree_ = 0;
};

/// d - w_x - w_y - w_z
inline std::int64_t a_invariant(const BrieskornDescriptor& b)
{
  const auto& w = b.weights();
  return b.degree() - w[0] - w[1] - w[2];
}

/// Number of basis monomials of weighted degree <= a(B), i.e. the sum of
/// dim B_i over 0 <= i <= a(B).
inline std::int64_t weighted_pg(const BrieskornDescriptor& b)
{
  const auto top = a_invariant(b);
  const auto& w = b.weights();
  std::int64_t count = 0;
  for (std::int64_t a = 0; a < b.exponents()[0] && a * w[0] <= top; ++a)
    for (std::int64_t bb = 0; a * w[0] + bb * w[1] <= top; ++bb)
      for (std::int64_t c = 0; a * w[0] + bb * w[1] + c * w[2] <= top; ++c)
        ++count;
  return count;
}

/// l(A/m^{n+1}) for A = k[x,y,z]/(x^e + y^e + z^e): lattice points with
/// a <= e-1 and a + b + c <= n.
inline std::int64_t fermat_colength(std::int64_t e, std::int64_t n)
{
  if (e < 2)
    throw DomainError("Fermat degree must be >= 2");
  if (n < 0)
    throw DomainError("colength index must be nonnegative");
  std::int64_t count = 0;
  for (std::int64_t a = 0; a <= e - 1 && a <= n; ++a)
    for (std::int64_t b = 0; a + b <= n; ++b)
      for (std::int64_t c = 0; a + b + c <= n; ++c)
        ++count;
  return count;
}

/// Piecewise closed form for the same colength: the Hilbert polynomial
/// e C(n+2,2) - C(e,2) (n+1) + C(e,3) when n >= e, and C(n+3,3) below.
inline Integer fermat_closed_form(std::int64_t e, std::int64_t n)
{
  if (e < 2)
    throw DomainError("Fermat degree must be >= 2");
  if (n < 0)
    throw DomainError("colength index must be nonnegative");
  if (n >= e)
    return e * binomial(n + 2, 2) - Integer(e * (e - 1) / 2) * (n + 1) +
           Integer(e * (e - 1) * (e - 2) / 6);
  return Integer((n + 1) * (n + 2) * (n + 3) / 6);
}

/// h1[k] = C(e-k, 3) for k = 1..e.
inline std::vector<std::int64_t> fermat_h1_sequence(std::int64_t e)
{
  if (e < 2)
    throw DomainError("Fermat degree must be >= 2");
  std::vector<std::int64_t> h1;
  for (std::int64_t k = 1; k <= e; ++k)
    h1.push_back(to_int64(binomial(e - k, 3)));
  return h1;
}

/// Datum of the maximal ideal of the Fermat surface of degree e:
/// Z^2 = -e, Z.K = e(e-2), p_g = C(e,3).
inline NumericalIdealDatum fermat_datum(std::int64_t e)
{
  auto h1 = fermat_h1_sequence(e);
  const auto pg = to_int64(binomial(e, 3));
  while (static_cast<std::int64_t>(h1.size()) < pg + 1)
    h1.push_back(0);
  return NumericalIdealDatum(-e, e * (e - 2), pg, std::move(h1), "fermat" + std::to_string(e));
}

} // namespace pgideal

#endif

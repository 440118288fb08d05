#ifndef PGIDEAL_REES_HPP
#define PGIDEAL_REES_HPP

// Ring-side certification for hypersurfaces x^2 + g(y,z): the extended Rees
// algebra presentation k[X,Y,Z,U]/(F) of the maximal ideal, the Jacobian (R1)
// check on it, and the order/stability criteria for double points.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace pgideal {

/// With X = xt, Y = yt, Z = zt, U = 1/t and o = ord(f), the term
/// c x^i y^j z^k becomes c X^i Y^j Z^k U^{i+j+k-o}; R'(m) = k[X,Y,Z,U]/(F).
inline SparsePolynomial extended_rees_F(const SparsePolynomial& f)
{
  if (f.arity() != 3)
    throw DomainError("extended Rees presentation needs a polynomial in x, y, z");
  if (f.is_zero())
    throw DomainError("extended Rees presentation of the zero polynomial");
  const auto o = f.order();
  SparsePolynomial F(4);
  for (const auto& [m, c] : f.terms()) {
    Monomial t = m;
    t.exp[3] = static_cast<std::uint32_t>(m.degree() - o);
    F.add_term(t, c);
  }
  return F;
}

/// dF/dX, dF/dY, dF/dZ, dF/dU and F, each made primitive; zero generators and
/// exact repeats are dropped.
inline std::vector<SparsePolynomial> jacobian_ideal(const SparsePolynomial& F)
{
  if (F.is_zero())
    throw DomainError("Jacobian ideal of the zero polynomial");
  std::vector<SparsePolynomial> gens;
  auto push = [&](const SparsePolynomial& p) {
    if (p.is_zero())
      return;
    auto q = p.primitive();
    for (const auto& g : gens)
      if (g == q)
        return;
    gens.push_back(std::move(q));
  };
  for (std::size_t v = 0; v < F.arity(); ++v)
    push(F.partial_derivative(v));
  push(F);
  return gens;
}

/// Dimension of the singular locus V(J(F)) of the hypersurface F = 0 in
/// affine 4-space.
inline int singular_locus_dimension(const SparsePolynomial& F, const GroebnerBudget& budget = {})
{
  if (F.arity() != 4)
    throw DomainError("R1 test needs a polynomial in X, Y, Z, U");
  return ideal_dimension(jacobian_ideal(F), budget);
}

/// Serre's R1 for the 3-dimensional hypersurface k[X,Y,Z,U]/(F): the singular
/// locus has dimension <= 1. A hypersurface is Cohen-Macaulay, so R1 is
/// equivalent to normality. F is assumed irreducible (not checked).
inline bool r1_hypersurface_test(const SparsePolynomial& F, const GroebnerBudget& budget = {})
{
  return singular_locus_dimension(F, budget) <= 1;
}

namespace detail {
inline void check_yz_only(const SparsePolynomial& g)
{
  if (g.arity() != 3)
    throw DomainError("g must be a polynomial in y, z");
  if (g.is_zero())
    throw DomainError("g must be nonzero");
  for (const auto& [m, c] : g.terms())
    if (m.exp[0] != 0)
      throw DomainError("g must not involve x");
}
} // namespace detail

/// For A = k[[x,y,z]]/(x^2 + g(y,z)) with an isolated singularity: the maximal
/// ideal is a p_g-ideal iff ord(g) <= 3 (ord <= 2 is a rational double point,
/// ord 3 the stable normal case, ord >= 4 makes R(m) non-normal).
inline bool double_point_pg_test(const SparsePolynomial& g)
{
  detail::check_yz_only(g);
  return g.order() <= 3;
}

/// x^2 + g as a polynomial in x, y, z.
inline SparsePolynomial double_point_equation(const SparsePolynomial& g)
{
  detail::check_yz_only(g);
  return SparsePolynomial::term(3, 1, {2, 0, 0, 0}) + g;
}

/// A/m^{D+1} for A = k[x,y,z]/(x^2+g), with k-basis the monomials x^a y^b z^c,
/// a <= 1, a+b+c <= D. Ideals are compared through the ranks of their images.
/// Needs ord(g) >= 2 so that x^2 -> -g never lowers degree.
class TruncatedDoublePoint
{
public:
  TruncatedDoublePoint(const SparsePolynomial& g, std::uint64_t degree_bound)
    : g_(g), bound_(degree_bound)
  {
    detail::check_yz_only(g);
    if (g.order() < 2)
      throw DomainError("truncated double point needs ord(g) >= 2");
    for (std::uint32_t a = 0; a <= 1; ++a)
      for (std::uint32_t b = 0; a + b <= bound_; ++b)
        for (std::uint32_t c = 0; a + b + c <= bound_; ++c)
          basis_.push_back(Monomial{{a, b, c, 0}});
  }

  std::uint64_t degree_bound() const noexcept { return bound_; }

  /// Normal form: x^2 -> -g until x-degree <= 1, then drop degree > D.
  SparsePolynomial reduce(SparsePolynomial p) const
  {
    SparsePolynomial out(3);
    while (!p.is_zero()) {
      auto it = p.terms().begin();
      for (; it != p.terms().end(); ++it)
        if (it->first.exp[0] >= 2)
          break;
      if (it == p.terms().end())
        break;
      Monomial m = it->first;
      const Rational c = it->second;
      p.add_term(m, -c);
      m.exp[0] -= 2;
      if (m.degree() + g_.order() > bound_)
        continue;
      p -= g_.scaled_shift(c, m);
    }
    for (const auto& [m, c] : p.terms())
      if (m.degree() <= bound_)
        out.add_term(m, c);
    return out;
  }

  /// Rank of the k-span of { b * h : b basis monomial, h in gens } modulo m^{D+1}.
  std::size_t span_rank(const std::vector<SparsePolynomial>& gens) const
  {
    std::vector<std::vector<Rational>> rows;
    for (const auto& h : gens)
      for (const auto& b : basis_) {
        const auto r = reduce(h.scaled_shift(1, b));
        if (r.is_zero())
          continue;
        std::vector<Rational> row(basis_.size());
        for (const auto& [m, c] : r.terms())
          row[column(m)] = c;
        rows.push_back(std::move(row));
      }
    return rank(std::move(rows));
  }

  /// Equality of two ideals of A modulo m^{D+1}.
  bool same_ideal(const std::vector<SparsePolynomial>& a, const std::vector<SparsePolynomial>& b) const
  {
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto r = span_rank(both);
    return span_rank(a) == r && span_rank(b) == r;
  }

private:
  std::size_t column(const Monomial& m) const
  {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == m)
        return i;
    throw InternalInconsistencyError("monomial outside the truncated basis");
  }

  static std::size_t rank(std::vector<std::vector<Rational>> rows)
  {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c] == 0)
        ++p;
      if (p == rows.size())
        continue;
      std::swap(rows[p], rows[r]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0)
          continue;
        const Rational f = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < cols; ++j)
          rows[i][j] -= f * rows[r][j];
      }
      ++r;
    }
    return r;
  }

  SparsePolynomial g_;
  std::uint64_t bound_;
  std::vector<Monomial> basis_;
};

/// Smallest degree bound the stability check accepts for g: max(4, ord(g) + 2).
inline std::uint64_t default_stability_bound(const SparsePolynomial& g)
{
  detail::check_yz_only(g);
  return std::max<std::uint64_t>(4, g.order() + 2);
}

/// m^2 = Qm for m = (x,y,z) and the reduction Q = (y,z) of m in
/// k[[x,y,z]]/(x^2+g), compared modulo m^{D+1}. All generators in play have
/// degree <= ord(g) + 1, so D = ord(g) + 2 decides the question.
inline bool double_point_stability(const SparsePolynomial& g, std::uint64_t degree_bound)
{
  if (degree_bound < 4)
    throw DomainError("stability degree bound D must be >= 4");
  const TruncatedDoublePoint ring(g, degree_bound);
  auto mono = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return SparsePolynomial::term(3, 1, {a, b, c, 0});
  };
  const std::vector<SparsePolynomial> m_squared{mono(2, 0, 0), mono(1, 1, 0), mono(1, 0, 1),
                                                mono(0, 2, 0), mono(0, 1, 1), mono(0, 0, 2)};
  // (y, z) * (x, y, z)
  const std::vector<SparsePolynomial> q_m{mono(1, 1, 0), mono(0, 2, 0), mono(0, 1, 1),
                                          mono(1, 0, 1), mono(0, 0, 2)};
  return ring.same_ideal(m_squared, q_m);
}

} // namespace pgideal

#endif

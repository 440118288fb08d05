#ifndef PGIDEAL_GROEBNER_HPP
#define PGIDEAL_GROEBNER_HPP

// Buchberger's algorithm over Q (normal selection strategy, product and chain
// criteria) producing reduced Gröbner bases, and the Krull dimension of the
// quotient read off the leading monomials.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace pgideal {

/// Hard caps for one Gröbner computation; exceeding any of them raises
/// BudgetError.
struct GroebnerBudget
{
  std::size_t max_basis_size = 500;
  std::size_t max_pairs = 100000;
  std::size_t max_reduction_steps = 20000000;
  std::size_t max_coefficient_bits = 1 << 16;
};

namespace detail {

class ReductionCounter
{
public:
  explicit ReductionCounter(const GroebnerBudget& b) : budget_(b) {}

  void step()
  {
    if (++steps_ > budget_.max_reduction_steps)
      throw BudgetError("Gröbner reduction exceeded " + std::to_string(budget_.max_reduction_steps) +
                        " steps");
  }

  void check_coefficients(const SparsePolynomial& p) const
  {
    for (const auto& [m, c] : p.terms()) {
      const auto bits = std::max(msb_or_zero(numerator(c)), msb_or_zero(denominator(c)));
      if (bits > budget_.max_coefficient_bits)
        throw BudgetError("Gröbner coefficient exceeded " + std::to_string(budget_.max_coefficient_bits) +
                          " bits");
    }
  }

  const GroebnerBudget& budget() const { return budget_; }

private:
  static std::size_t msb_or_zero(Integer v)
  {
    if (v < 0)
      v = -v;
    return v == 0 ? 0 : boost::multiprecision::msb(v);
  }

  GroebnerBudget budget_;
  std::size_t steps_ = 0;
};

inline SparsePolynomial normal_form(SparsePolynomial p, const std::vector<SparsePolynomial>& basis,
                                    ReductionCounter& counter)
{
  SparsePolynomial rem(p.arity());
  while (!p.is_zero()) {
    const Monomial m = p.leading_monomial();
    const Rational c = p.leading_coefficient();
    const SparsePolynomial* div = nullptr;
    for (const auto& g : basis)
      if (g.leading_monomial().divides(m)) {
        div = &g;
        break;
      }
    counter.step();
    if (div) {
      p -= div->scaled_shift(c / div->leading_coefficient(), m / div->leading_monomial());
    } else {
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return rem;
}

} // namespace detail

/// Remainder of p on division by `basis` (every term reduced).
inline SparsePolynomial normal_form(const SparsePolynomial& p, const std::vector<SparsePolynomial>& basis,
                                    const GroebnerBudget& budget = {})
{
  for (const auto& g : basis) {
    p.check_arity(g);
    if (g.is_zero())
      throw DomainError("division by the zero polynomial");
  }
  detail::ReductionCounter counter(budget);
  return detail::normal_form(p, basis, counter);
}

inline SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g)
{
  const auto l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.scaled_shift(Rational(1) / f.leading_coefficient(), l / f.leading_monomial()) -
         g.scaled_shift(Rational(1) / g.leading_coefficient(), l / g.leading_monomial());
}

/// Reduced Gröbner basis (monic, sorted by descending leading monomial) of the
/// ideal generated by `gens`. The zero ideal gives an empty basis, the unit
/// ideal gives {1}.
inline std::vector<SparsePolynomial> groebner_basis(const std::vector<SparsePolynomial>& gens,
                                                    MonomialOrder = {}, const GroebnerBudget& budget = {})
{
  if (gens.empty())
    throw DomainError("Gröbner basis of an empty generator list");
  const std::size_t arity = gens.front().arity();
  detail::ReductionCounter counter(budget);

  std::vector<SparsePolynomial> g;
  for (const auto& f : gens) {
    f.check_arity(gens.front());
    if (f.is_zero())
      continue;
    if (f.is_constant())
      return {SparsePolynomial::constant(arity, 1)};
    g.push_back(f.monic());
  }
  if (g.empty())
    return {};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pending.emplace(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::size_t processed = 0;
  while (!pending.empty()) {
    // normal strategy: smallest lcm first, ties by index
    auto best = pending.begin();
    Monomial best_lcm = lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const auto l = lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
      if (MonomialOrder::greater(best_lcm, l)) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    if (++processed > budget.max_pairs)
      throw BudgetError("Gröbner computation exceeded " + std::to_string(budget.max_pairs) + " pairs");

    const auto& lm_i = g[i].leading_monomial();
    const auto& lm_j = g[j].leading_monomial();
    if (coprime(lm_i, lm_j))
      continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && g[k].leading_monomial().divides(best_lcm) && !is_pending(i, k) &&
              !is_pending(j, k);
    if (chain)
      continue;

    auto h = detail::normal_form(s_polynomial(g[i], g[j]), g, counter);
    if (h.is_zero())
      continue;
    if (h.is_constant())
      return {SparsePolynomial::constant(arity, 1)};
    h = h.monic();
    counter.check_coefficients(h);
    if (g.size() >= budget.max_basis_size)
      throw BudgetError("Gröbner basis exceeded " + std::to_string(budget.max_basis_size) + " elements");
    const std::size_t n = g.size();
    g.push_back(std::move(h));
    for (std::size_t k = 0; k < n; ++k)
      pending.emplace(k, n);
  }

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<SparsePolynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b)
        continue;
      const auto& la = g[a].leading_monomial();
      const auto& lb = g[b].leading_monomial();
      redundant = lb.divides(la) && (lb != la || b < a);
    }
    if (!redundant)
      minimal.push_back(g[a]);
  }

  // interreduce tails
  std::vector<SparsePolynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<SparsePolynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a)
        others.push_back(minimal[b]);
    reduced.push_back(detail::normal_form(minimal[a], others, counter).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const auto& x, const auto& y) {
    return MonomialOrder::greater(x.leading_monomial(), y.leading_monomial());
  });
  return reduced;
}

/// Krull dimension of k[vars]/I: the largest set of variables containing the
/// support of no leading monomial of the reduced basis. -1 for the unit ideal.
inline int ideal_dimension(const std::vector<SparsePolynomial>& gens, const GroebnerBudget& budget = {})
{
  const auto basis = groebner_basis(gens, {}, budget);
  const std::size_t arity = gens.front().arity();
  if (basis.size() == 1 && basis.front().is_constant())
    return -1;
  int best = 0;
  for (unsigned set = 0; set < (1u << arity); ++set) {
    bool independent = true;
    for (const auto& g : basis)
      if ((g.leading_monomial().support() & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent)
      best = std::max(best, std::popcount(set));
  }
  return best;
}

} // namespace pgideal

#endif

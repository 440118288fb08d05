#ifndef PGIDEAL_LATTICE_HPP
#define PGIDEAL_LATTICE_HPP

// Weighted dual graphs of resolutions as negative-definite lattices, and the
// cycles computed from them (fundamental, canonical, anti-nef closures, Z-perp).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace pgideal {

struct Vertex
{
  std::string id;
  std::int64_t self_intersection = -2;
  std::int64_t genus = 0;
};

struct Edge
{
  std::string a;
  std::string b;
  std::int64_t multiplicity = 1;
};

using IntersectionMatrix = std::vector<std::vector<std::int64_t>>;

/// Exceptional curves E_i with their self-intersections and genera, and the
/// intersection numbers E_i.E_j between distinct curves.
///
/// The constructor checks the structural invariants (unique ids, E_i^2 <= -1,
/// genus >= 0, edges between distinct known vertices, connectedness). Negative
/// definiteness is a property queried with is_negative_definite(); operations
/// that need it say so.
class DualGraph
{
public:
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges))
  {
    if (vertices_.empty())
      throw DomainError("dual graph has no vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& v = vertices_[i];
      if (v.id.empty())
        throw DomainError("vertex with empty id");
      if (index_of(v.id) != i)
        throw DomainError("duplicate vertex id '" + v.id + "'");
      if (v.self_intersection > -1)
        throw DomainError("vertex '" + v.id + "' has self-intersection " +
                          std::to_string(v.self_intersection) + " > -1");
      if (v.genus < 0)
        throw DomainError("vertex '" + v.id + "' has negative genus");
    }
    const std::size_t n = vertices_.size();
    matrix_.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      matrix_[i][i] = vertices_[i].self_intersection;
    for (const auto& e : edges_) {
      const std::size_t a = index(e.a);
      const std::size_t b = index(e.b);
      if (a == b)
        throw DomainError("loop edge at vertex '" + e.a + "'");
      if (e.multiplicity < 1)
        throw DomainError("edge " + e.a + "-" + e.b + " has non-positive multiplicity");
      matrix_[a][b] += e.multiplicity;
      matrix_[b][a] += e.multiplicity;
    }
    if (!connected())
      throw DomainError("dual graph is not connected");
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const IntersectionMatrix& matrix() const noexcept { return matrix_; }

  std::optional<std::size_t> index_of(std::string_view id) const
  {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].id == id)
        return i;
    return std::nullopt;
  }

  std::size_t index(std::string_view id) const
  {
    if (auto i = index_of(id))
      return *i;
    throw SupportError("unknown vertex id '" + std::string(id) + "'");
  }

  /// Full subgraph on the given vertex indices (kept in graph order).
  DualGraph induced(std::vector<std::size_t> keep) const
  {
    std::sort(keep.begin(), keep.end());
    std::vector<Vertex> vs;
    for (auto i : keep)
      vs.push_back(vertices_.at(i));
    std::vector<Edge> es;
    for (const auto& e : edges_) {
      const auto a = index(e.a), b = index(e.b);
      if (std::binary_search(keep.begin(), keep.end(), a) &&
          std::binary_search(keep.begin(), keep.end(), b))
        es.push_back(e);
    }
    return DualGraph(std::move(vs), std::move(es));
  }

private:
  bool connected() const
  {
    const std::size_t n = vertices_.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && matrix_[i][j] != 0 && !seen[j]) {
          seen[j] = true;
          ++count;
          stack.push_back(j);
        }
    }
    return count == n;
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  IntersectionMatrix matrix_;
};

/// Divisor sum c_i E_i, stored densely in the vertex order of its graph.
template <class T>
class BasicCycle
{
public:
  using value_type = T;

  BasicCycle() = default;
  explicit BasicCycle(std::vector<T> coefficients) : c_(std::move(coefficients)) {}
  static BasicCycle zero(std::size_t n) { return BasicCycle(std::vector<T>(n, T(0))); }

  std::size_t size() const noexcept { return c_.size(); }
  const T& operator[](std::size_t i) const { return c_.at(i); }
  T& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<T>& coefficients() const noexcept { return c_; }

  bool is_zero() const
  {
    return std::all_of(c_.begin(), c_.end(), [](const T& v) { return v == 0; });
  }
  bool is_effective() const
  {
    return std::all_of(c_.begin(), c_.end(), [](const T& v) { return v >= 0; });
  }

  BasicCycle& operator+=(const BasicCycle& o)
  {
    check_same_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_[i];
    return *this;
  }
  friend BasicCycle operator+(BasicCycle a, const BasicCycle& b) { return a += b; }
  friend BasicCycle operator*(const T& k, BasicCycle a)
  {
    for (auto& v : a.c_)
      v *= k;
    return a;
  }
  friend bool operator==(const BasicCycle&, const BasicCycle&) = default;

  // componentwise partial order
  bool operator<=(const BasicCycle& o) const
  {
    check_same_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] > o.c_[i])
        return false;
    return true;
  }

private:
  void check_same_size(const BasicCycle& o) const
  {
    if (o.c_.size() != c_.size())
      throw SupportError("cycles live on graphs of different size");
  }

  std::vector<T> c_;
};

using Cycle = BasicCycle<Integer>;
using RationalCycle = BasicCycle<Rational>;

inline RationalCycle to_rational(const Cycle& z)
{
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z.coefficients())
    c.emplace_back(v);
  return RationalCycle(std::move(c));
}

/// Builds a cycle from (vertex id, coefficient) pairs; unlisted vertices get 0.
inline Cycle make_cycle(const DualGraph& g,
                        const std::vector<std::pair<std::string, Integer>>& entries)
{
  auto z = Cycle::zero(g.size());
  for (const auto& [id, c] : entries)
    z[g.index(id)] += c;
  return z;
}

inline Cycle reduced_cycle(const DualGraph& g)
{
  return Cycle(std::vector<Integer>(g.size(), Integer(1)));
}

inline Cycle vertex_cycle(const DualGraph& g, std::size_t i)
{
  auto z = Cycle::zero(g.size());
  z[i] = 1;
  return z;
}

template <class T>
void check_support(const DualGraph& g, const BasicCycle<T>& z)
{
  if (z.size() != g.size())
    throw SupportError("cycle has " + std::to_string(z.size()) +
                       " coefficients but the graph has " + std::to_string(g.size()) +
                       " vertices");
}

/// Z.E_i
template <class T>
T pairing_with_vertex(const DualGraph& g, const BasicCycle<T>& z, std::size_t i)
{
  check_support(g, z);
  const auto& row = g.matrix().at(i);
  T s = 0;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0)
      s += z[j] * row[j];
  return s;
}

/// Z^T M W for the intersection matrix M.
template <class T>
T pairing(const DualGraph& g, const BasicCycle<T>& z, const BasicCycle<T>& w)
{
  check_support(g, z);
  check_support(g, w);
  T s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (z[i] != 0)
      s += z[i] * pairing_with_vertex(g, w, i);
  return s;
}

inline Rational pairing(const DualGraph& g, const Cycle& z, const RationalCycle& w)
{
  return pairing(g, to_rational(z), w);
}

/// Leading principal minors alternate in sign starting negative. Fraction-free
/// Gaussian elimination: the k-th pivot is the k-th leading minor.
inline bool is_negative_definite(const IntersectionMatrix& m)
{
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw DomainError("intersection matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i])
        throw DomainError("intersection matrix is not symmetric");

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m[i][j];

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& minor = a[k][k];
    const int want = (k % 2 == 0) ? -1 : 1;
    if (minor == 0 || (minor > 0 ? 1 : -1) != want)
      return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

inline bool is_negative_definite(const DualGraph& g) { return is_negative_definite(g.matrix()); }

inline bool is_anti_nef(const DualGraph& g, const Cycle& z)
{
  check_support(g, z);
  if (!z.is_effective())
    throw DomainError("anti-nef test needs an effective cycle");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (pairing_with_vertex(g, z, i) > 0)
      return false;
  return true;
}

/// Coefficient cap for the increment loop: 64 * sum |E_i^2|.
inline Integer closure_coefficient_bound(const DualGraph& g)
{
  Integer s = 0;
  for (const auto& v : g.vertices())
    s += -v.self_intersection;
  return 64 * s;
}

/// Least anti-nef W >= Z. Repeatedly adds E_i for the first vertex i in
/// `priority` with W.E_i > 0. The result does not depend on the priority order
/// (any anti-nef Y >= W has Y_i > W_i whenever W.E_i > 0), which the tests check
/// over all orders on small graphs.
inline Cycle anti_nef_closure(const DualGraph& g, Cycle z, std::span<const std::size_t> priority)
{
  check_support(g, z);
  if (!z.is_effective())
    throw DomainError("anti-nef closure needs an effective cycle");
  if (z.is_zero())
    throw DomainError("anti-nef closure needs a nonzero cycle");
  {
    auto sorted = std::vector<std::size_t>(priority.begin(), priority.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(g.size());
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    if (sorted != expected)
      throw DomainError("priority order is not a permutation of the vertices");
  }

  const auto& m = g.matrix();
  const Integer bound = closure_coefficient_bound(g);
  std::vector<Integer> ze(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    ze[i] = pairing_with_vertex(g, z, i);

  for (;;) {
    auto it = std::find_if(priority.begin(), priority.end(),
                           [&](std::size_t i) { return ze[i] > 0; });
    if (it == priority.end())
      return z;
    const std::size_t i = *it;
    z[i] += 1;
    if (z[i] > bound)
      throw NonTerminationError("anti-nef closure exceeded coefficient bound " + bound.str() +
                                " at vertex '" + g.vertex(i).id +
                                "'; the graph is not negative definite");
    for (std::size_t j = 0; j < g.size(); ++j)
      ze[j] += m[i][j];
  }
}

inline Cycle anti_nef_closure(const DualGraph& g, Cycle z)
{
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return anti_nef_closure(g, std::move(z), order);
}

inline Cycle fundamental_cycle(const DualGraph& g)
{
  return anti_nef_closure(g, reduced_cycle(g));
}

/// Z.K_X from adjunction, K.E_i = -E_i^2 - 2 + 2 g_i. Always an integer.
inline Integer canonical_degree(const DualGraph& g, const Cycle& z)
{
  check_support(g, z);
  Integer s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    s += z[i] * (-v.self_intersection - 2 + 2 * v.genus);
  }
  return s;
}

/// Z_K = -K_X, the rational cycle with Z_K.E_i = E_i^2 + 2 - 2 g_i.
inline RationalCycle canonical_cycle(const DualGraph& g)
{
  if (!is_negative_definite(g))
    throw DomainError("canonical cycle needs a negative-definite graph");
  const std::size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = g.matrix()[i][j];
    const auto& v = g.vertex(i);
    a[i][n] = v.self_intersection + 2 - 2 * v.genus;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0)
      ++p;
    if (p == n)
      throw InternalInconsistencyError("singular intersection matrix in canonical cycle solve");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0)
        continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j)
        a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = a[i][n] / a[i][i];
  return RationalCycle(std::move(c));
}

/// Connected components of the full subgraph on { i : Z.E_i = 0 }.
inline std::vector<DualGraph> z_perp(const DualGraph& g, const Cycle& z)
{
  check_support(g, z);
  const std::size_t n = g.size();
  std::vector<bool> in(n);
  for (std::size_t i = 0; i < n; ++i)
    in[i] = pairing_with_vertex(g, z, i) == 0;

  std::vector<DualGraph> out;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (!in[s] || seen[s])
      continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (in[j] && !seen[j] && i != j && g.matrix()[i][j] != 0) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    out.push_back(g.induced(std::move(comp)));
  }
  return out;
}

/// p_a(Z) = (Z^2 + Z.K)/2 + 1
inline Integer arithmetic_genus(const DualGraph& g, const Cycle& z)
{
  const Integer twice = pairing(g, z, z) + canonical_degree(g, z);
  if (twice % 2 != 0)
    throw InternalInconsistencyError("Z^2 + Z.K is odd");
  return twice / 2 + 1;
}

/// Artin's criterion: rational iff the fundamental cycle has arithmetic genus 0.
inline bool artin_rational_test(const DualGraph& g)
{
  if (!is_negative_definite(g))
    throw DomainError("rationality test needs a negative-definite graph");
  return arithmetic_genus(g, fundamental_cycle(g)) == 0;
}

} // namespace pgideal

#endif

#ifndef PGIDEAL_POLYNOMIAL_HPP
#define PGIDEAL_POLYNOMIAL_HPP

// Sparse multivariate polynomials over Q in at most four variables, ordered by
// graded reverse lexicographic order with variable 0 > 1 > 2 > 3.
//
// Variable names: arity 3 uses x, y, z; arity 4 uses X, Y, Z, U.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace pgideal {

inline constexpr std::size_t max_arity = 4;

struct Monomial
{
  std::array<std::uint32_t, max_arity> exp{};

  std::uint64_t degree() const
  {
    std::uint64_t d = 0;
    for (auto e : exp)
      d += e;
    return d;
  }

  bool divides(const Monomial& o) const
  {
    for (std::size_t i = 0; i < max_arity; ++i)
      if (exp[i] > o.exp[i])
        return false;
    return true;
  }

  // bitmask of variables with positive exponent
  unsigned support() const
  {
    unsigned s = 0;
    for (std::size_t i = 0; i < max_arity; ++i)
      if (exp[i] > 0)
        s |= 1u << i;
    return s;
  }

  friend Monomial operator*(Monomial a, const Monomial& b)
  {
    for (std::size_t i = 0; i < max_arity; ++i)
      a.exp[i] += b.exp[i];
    return a;
  }

  // requires b | a
  friend Monomial operator/(Monomial a, const Monomial& b)
  {
    for (std::size_t i = 0; i < max_arity; ++i)
      a.exp[i] -= b.exp[i];
    return a;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b)
  {
    Monomial m;
    for (std::size_t i = 0; i < max_arity; ++i)
      m.exp[i] = std::max(a.exp[i], b.exp[i]);
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.support() & b.support()) == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The only monomial order used here: graded reverse lexicographic, variable 0
/// largest. `greater(a, b)` is a > b.
struct MonomialOrder
{
  static bool greater(const Monomial& a, const Monomial& b)
  {
    const auto da = a.degree(), db = b.degree();
    if (da != db)
      return da > db;
    for (std::size_t i = max_arity; i-- > 0;)
      if (a.exp[i] != b.exp[i])
        return a.exp[i] < b.exp[i];
    return false;
  }

  bool operator()(const Monomial& a, const Monomial& b) const { return greater(a, b); }
};

inline std::string variable_name(std::size_t arity, std::size_t i)
{
  static constexpr std::array<const char*, 3> lower{"x", "y", "z"};
  static constexpr std::array<const char*, 4> upper{"X", "Y", "Z", "U"};
  if (arity == 3)
    return lower.at(i);
  if (arity == 4)
    return upper.at(i);
  return "v" + std::to_string(i);
}

class SparsePolynomial
{
public:
  // descending in the monomial order, so begin() is the leading term
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit SparsePolynomial(std::size_t arity = 4) : arity_(arity)
  {
    if (arity == 0 || arity > max_arity)
      throw DomainError("polynomial arity must be in 1..4");
  }

  static SparsePolynomial constant(std::size_t arity, const Rational& c)
  {
    SparsePolynomial p(arity);
    p.add_term(Monomial{}, c);
    return p;
  }

  static SparsePolynomial variable(std::size_t arity, std::size_t i)
  {
    SparsePolynomial p(arity);
    Monomial m;
    m.exp.at(i) = 1;
    if (i >= arity)
      throw DomainError("variable index out of range");
    p.add_term(m, 1);
    return p;
  }

  static SparsePolynomial term(std::size_t arity, const Rational& c, std::array<std::uint32_t, max_arity> e)
  {
    SparsePolynomial p(arity);
    for (std::size_t i = arity; i < max_arity; ++i)
      if (e[i] != 0)
        throw DomainError("exponent on a variable beyond the arity");
    p.add_term(Monomial{e}, c);
    return p;
  }

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const { return terms_.size() == 1 && terms_.begin()->first.degree() == 0; }

  const Monomial& leading_monomial() const
  {
    if (is_zero())
      throw DomainError("zero polynomial has no leading monomial");
    return terms_.begin()->first;
  }

  const Rational& leading_coefficient() const
  {
    if (is_zero())
      throw DomainError("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
  }

  Rational coefficient(const Monomial& m) const
  {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest total degree of a term.
  std::uint64_t total_degree() const
  {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, m.degree());
    return d;
  }

  /// Smallest total degree of a term (the m-adic order).
  std::uint64_t order() const
  {
    if (is_zero())
      throw DomainError("zero polynomial has no order");
    std::uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      d = std::min(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Rational& c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o)
  {
    check_arity(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }

  SparsePolynomial& operator-=(const SparsePolynomial& o)
  {
    check_arity(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

  friend SparsePolynomial operator-(SparsePolynomial a)
  {
    for (auto& [m, c] : a.terms_)
      c = -c;
    return a;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b)
  {
    a.check_arity(b);
    SparsePolynomial r(a.arity_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend SparsePolynomial operator*(const Rational& k, SparsePolynomial a)
  {
    if (k == 0)
      return SparsePolynomial(a.arity_);
    for (auto& [m, c] : a.terms_)
      c *= k;
    return a;
  }

  /// c * m * this
  SparsePolynomial scaled_shift(const Rational& c, const Monomial& m) const
  {
    SparsePolynomial r(arity_);
    if (c == 0)
      return r;
    auto hint = r.terms_.end();
    for (const auto& [mm, cc] : terms_)
      hint = r.terms_.emplace_hint(hint, mm * m, cc * c);
    return r;
  }

  SparsePolynomial partial_derivative(std::size_t var) const
  {
    if (var >= arity_)
      throw DomainError("derivative variable " + std::to_string(var) + " beyond arity " +
                        std::to_string(arity_));
    SparsePolynomial r(arity_);
    for (const auto& [m, c] : terms_) {
      if (m.exp[var] == 0)
        continue;
      Monomial d = m;
      d.exp[var] -= 1;
      r.add_term(d, c * m.exp[var]);
    }
    return r;
  }

  /// Scaled to leading coefficient 1; zero stays zero.
  SparsePolynomial monic() const
  {
    if (is_zero())
      return *this;
    return Rational(1) / leading_coefficient() * *this;
  }

  /// Integer coefficients with gcd 1 and positive leading coefficient.
  SparsePolynomial primitive() const
  {
    if (is_zero())
      return *this;
    Integer den = 1;
    for (const auto& [m, c] : terms_)
      den = lcm(den, denominator(c));
    auto r = Rational(den) * *this;
    Integer content = 0;
    for (const auto& [m, c] : r.terms_)
      content = gcd(content, numerator(c));
    Rational scale(Integer(1), content);
    if (r.leading_coefficient() < 0)
      scale = -scale;
    return scale * r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b)
  {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  std::string to_string() const
  {
    if (is_zero())
      return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? "-" : "+";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (m.exp[i] == 0)
          continue;
        if (!mono.empty())
          mono += "*";
        mono += variable_name(arity_, i);
        if (m.exp[i] > 1)
          mono += "^" + std::to_string(m.exp[i]);
      }
      if (mono.empty())
        s += pgideal::to_string(a);
      else if (a == 1)
        s += mono;
      else
        s += pgideal::to_string(a) + "*" + mono;
    }
    return s;
  }

  void check_arity(const SparsePolynomial& o) const
  {
    if (o.arity_ != arity_)
      throw DomainError("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
  }

private:
  std::size_t arity_;
  TermMap terms_;
};

namespace detail {

inline int variable_index(char c, std::size_t& arity)
{
  static constexpr std::string_view lower = "xyz";
  static constexpr std::string_view upper = "XYZU";
  if (auto p = lower.find(c); p != std::string_view::npos) {
    if (arity == 4)
      return -2;
    arity = 3;
    return static_cast<int>(p);
  }
  if (auto p = upper.find(c); p != std::string_view::npos) {
    if (arity == 3)
      return -2;
    arity = 4;
    return static_cast<int>(p);
  }
  return -1;
}

class PolynomialParser
{
public:
  PolynomialParser(std::string_view text, std::size_t arity) : s_(text), arity_(arity) {}

  SparsePolynomial parse()
  {
    struct Term
    {
      Rational coef;
      Monomial mono;
    };
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size())
      fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t{sign, {}};
      factor(t.coef, t.mono);
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        skip_ws();
        factor(t.coef, t.mono);
        skip_ws();
      }
      terms.push_back(std::move(t));
    }
    SparsePolynomial p(arity_ == 0 ? 3 : arity_);
    for (const auto& t : terms)
      p.add_term(t.mono, t.coef);
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const
  {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  Integer number()
  {
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::uint32_t exponent()
  {
    const auto start = pos_;
    const Integer e = number();
    if (e > 1000000)
      fail("exponent too large at offset " + std::to_string(start));
    return e.convert_to<std::uint32_t>();
  }

  void factor(Rational& coef, Monomial& mono)
  {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = number();
      skip_ws();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = number();
        if (den == 0)
          fail("zero denominator");
      }
      coef *= Rational(num, den);
      return;
    }
    const int v = variable_index(c, arity_);
    if (v == -2)
      fail(std::string("variable '") + c + "' mixes the {x,y,z} and {X,Y,Z,U} alphabets");
    if (v < 0)
      fail(c == '\0' ? std::string("unexpected end of input") : std::string("unexpected character '") + c + "'");
    if (arity_ != 0 && static_cast<std::size_t>(v) >= arity_)
      fail(std::string("variable '") + c + "' beyond arity");
    ++pos_;
    skip_ws();
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      e = exponent();
    }
    mono.exp[static_cast<std::size_t>(v)] += e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t arity_;
};

} // namespace detail

/// Parses sums of terms `c*x^a*y^b*z^c` (integer or p/q coefficients, any
/// factor order, whitespace ignored). The alphabet picks the arity: x,y,z -> 3,
/// X,Y,Z,U -> 4; a constant defaults to arity 3. ParseError positions are
/// 0-based character offsets.
inline SparsePolynomial parse_polynomial(std::string_view text)
{
  return detail::PolynomialParser(text, 0).parse();
}

/// As above but with the arity fixed in advance (3 or 4).
inline SparsePolynomial parse_polynomial(std::string_view text, std::size_t arity)
{
  if (arity != 3 && arity != 4)
    throw DomainError("parser arity must be 3 or 4");
  auto p = detail::PolynomialParser(text, arity).parse();
  if (p.arity() != arity)
    throw DomainError("polynomial has arity " + std::to_string(p.arity()) + ", expected " +
                      std::to_string(arity));
  return p;
}

} // namespace pgideal

#endif

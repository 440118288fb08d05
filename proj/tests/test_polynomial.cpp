#include <gtest/gtest.h>

#include <random>

#include <pgideal/polynomial.hpp>

using namespace pgideal;

namespace {
SparsePolynomial P(std::string_view s) { return parse_polynomial(s); }

std::size_t parse_offset(std::string_view s)
{
  try {
    parse_polynomial(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "expected ParseError for '" << s << "'";
  return 0;
}
} // namespace

TEST(Monomial, OrderIsGrevlex)
{
  auto m = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return Monomial{{a, b, c, 0}}; };
  EXPECT_TRUE(MonomialOrder::greater(m(0, 0, 2), m(1, 0, 0)));   // degree first
  EXPECT_TRUE(MonomialOrder::greater(m(1, 1, 0), m(0, 2, 0)));
  EXPECT_TRUE(MonomialOrder::greater(m(0, 2, 0), m(1, 0, 1)));   // smaller last exponent wins
  EXPECT_TRUE(MonomialOrder::greater(m(2, 0, 0), m(1, 1, 0)));
  EXPECT_FALSE(MonomialOrder::greater(m(1, 1, 1), m(1, 1, 1)));
  EXPECT_EQ(lcm(m(2, 0, 1), m(1, 3, 0)), m(2, 3, 1));
  EXPECT_TRUE(m(1, 0, 1).divides(m(2, 1, 1)));
  EXPECT_FALSE(m(1, 0, 2).divides(m(2, 1, 1)));
  EXPECT_TRUE(coprime(m(1, 0, 0), m(0, 2, 3)));
}

TEST(Monomial, OrderIsTotalAndMultiplicative)
{
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> ex(0, 4);
  for (int t = 0; t < 2000; ++t) {
    Monomial a{{ex(rng), ex(rng), ex(rng), ex(rng)}}, b{{ex(rng), ex(rng), ex(rng), ex(rng)}},
        c{{ex(rng), ex(rng), ex(rng), ex(rng)}};
    EXPECT_EQ(a == b, !MonomialOrder::greater(a, b) && !MonomialOrder::greater(b, a));
    EXPECT_EQ(MonomialOrder::greater(a, b), MonomialOrder::greater(a * c, b * c));
    if (!(a == Monomial{})) {
      EXPECT_TRUE(MonomialOrder::greater(a, Monomial{}));
    }
  }
}

TEST(Parser, RoundTrips)
{
  EXPECT_EQ(P("x^2+y^3+z^7").to_string(), "z^7+y^3+x^2");
  EXPECT_EQ(P("X^2 + Y^3*U + Z^7*U^5").to_string(), "Z^7*U^5+Y^3*U+X^2");
  EXPECT_EQ(P("3/2*x - 2*y*y + 0*z").to_string(), "-2*y^2+3/2*x");
  EXPECT_EQ(P("-x").to_string(), "-x");
  EXPECT_EQ(P("x - x").to_string(), "0");
  EXPECT_EQ(P("y*2*x").to_string(), "2*x*y");
  EXPECT_EQ(P("4/6").to_string(), "2/3");
  EXPECT_EQ(P("7").arity(), 3u);
  EXPECT_EQ(P("U").arity(), 4u);
  for (const char* s : {"z^7+y^3+x^2", "Z^7*U^5+Y^3*U+X^2", "-2*y^2+3/2*x", "x*y*z-1"})
    EXPECT_EQ(P(P(s).to_string()), P(s));
}

TEST(Parser, ErrorsReportOffsets)
{
  EXPECT_EQ(parse_offset("x^2 + X"), 6u);
  EXPECT_EQ(parse_offset("x^"), 2u);
  EXPECT_EQ(parse_offset("x + + y"), 4u);
  EXPECT_EQ(parse_offset("x y"), 2u);
  EXPECT_EQ(parse_offset("w"), 0u);
  EXPECT_EQ(parse_offset(""), 0u);
  EXPECT_EQ(parse_offset("1/0"), 3u);
  EXPECT_THROW(parse_polynomial("x", 4), ParseError);
  EXPECT_THROW(parse_polynomial("1", 5), DomainError);
}

TEST(Arithmetic, RingAxiomsOnRandomPolynomials)
{
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::uint32_t> ex(0, 3);
  auto random_poly = [&] {
    SparsePolynomial p(3);
    for (int i = 0; i < 4; ++i)
      p.add_term(Monomial{{ex(rng), ex(rng), ex(rng), 0}}, coef(rng));
    return p;
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
    // Leibniz rule
    for (std::size_t v = 0; v < 3; ++v)
      EXPECT_EQ((a * b).partial_derivative(v), a.partial_derivative(v) * b + a * b.partial_derivative(v));
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).leading_monomial(), a.leading_monomial() * b.leading_monomial());
      EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
      EXPECT_EQ((a * b).order(), a.order() + b.order());
    }
  }
}

TEST(Arithmetic, DegreeOrderDerivative)
{
  const auto f = P("x^2 + y^3 + z^7");
  EXPECT_EQ(f.total_degree(), 7u);
  EXPECT_EQ(f.order(), 2u);
  EXPECT_EQ(f.partial_derivative(2).to_string(), "7*z^6");
  EXPECT_TRUE(P("5").partial_derivative(0).is_zero());
  EXPECT_THROW(f.partial_derivative(3), DomainError);
  EXPECT_THROW(SparsePolynomial(3).order(), DomainError);
  EXPECT_THROW(SparsePolynomial(3).leading_monomial(), DomainError);
  EXPECT_THROW(P("x") + P("X"), DomainError);
}

TEST(Arithmetic, MonicAndPrimitive)
{
  EXPECT_EQ(P("2*x^2 - 4*y").monic().to_string(), "x^2-2*y");
  EXPECT_EQ(P("3/2*x - 9/4*y").primitive().to_string(), "2*x-3*y");
  EXPECT_EQ(P("-6*z^2 + 4*y").primitive().to_string(), "3*z^2-2*y");
  EXPECT_EQ(P("-1/3").primitive().to_string(), "1");
}

#include <gtest/gtest.h>

#include <random>
#include <string>

#include <pgideal/brieskorn.hpp>
#include <pgideal/hilbert.hpp>

#include "oracles.hpp"
#include "test_graphs.hpp"

using namespace pgideal;

namespace {

NumericalIdealDatum fermat(int e) { return fermat_datum(e); }

NumericalIdealDatum rational(std::int64_t zz = -2, std::int64_t zk = 0)
{
  return NumericalIdealDatum(zz, zk, 0, {0}, "rational");
}

std::string inconsistency(std::int64_t zz, std::int64_t zk, std::int64_t pg, std::vector<std::int64_t> h1)
{
  try {
    NumericalIdealDatum(zz, zk, pg, std::move(h1));
  } catch (const InconsistentDataError& e) {
    return e.what();
  }
  return {};
}

std::vector<NumericalIdealDatum> sample_data(std::size_t count, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<NumericalIdealDatum> out;
  while (out.size() < count)
    if (auto d = oracle::random_datum(rng))
      out.push_back(*d);
  return out;
}

} // namespace

TEST(KatoColength, Examples)
{
  EXPECT_EQ(kato_colength(fermat(2), 1), 1);
  EXPECT_EQ(kato_colength(fermat(4), 1), 1);
  EXPECT_EQ(kato_colength(fermat(4), 2), 4);
  EXPECT_THROW(kato_colength(fermat(4), 0), DomainError);
}

TEST(KatoColength, MatchesMonomialCountForFermat)
{
  // the integral closure of m^n is m^n for the Fermat cone
  for (int e = 2; e <= 8; ++e)
    for (int n = 1; n <= 3 * e; ++n)
      EXPECT_EQ(kato_colength(fermat(e), n), oracle::fermat_colength_by_series(e, n - 1)) << e << " " << n;
}

TEST(KatoColength, StrictlyIncreasingOnRandomData)
{
  for (const auto& d : sample_data(200, 1)) {
    EXPECT_GE(kato_colength(d, 1), 1);
    for (int n = 1; n < 20; ++n)
      EXPECT_LT(kato_colength(d, n), kato_colength(d, n + 1));
  }
}

TEST(Coefficients, Examples)
{
  EXPECT_EQ(coefficients(fermat(5)), (NormalHilbertCoefficients{5, 10, 10}));
  EXPECT_EQ(coefficients(fermat(4)), (NormalHilbertCoefficients{4, 6, 4}));
  EXPECT_EQ(coefficients(rational()).e2bar, 0);
  for (int e = 2; e <= 8; ++e)
    EXPECT_EQ(coefficients(fermat(e)),
              (NormalHilbertCoefficients{e, oracle::choose(e, 2), oracle::choose(e, 3)}));
}

TEST(Coefficients, E2WithinBoundsAndZeroIffPgIdeal)
{
  for (const auto& d : sample_data(300, 2)) {
    const auto c = coefficients(d);
    EXPECT_GE(c.e2bar, 0);
    EXPECT_LE(c.e2bar, d.pg());
    EXPECT_EQ(c.e2bar == 0, pg_ideal_test(d).verdict);
  }
}

TEST(HilbertPoly, Examples)
{
  EXPECT_EQ(hilbert_poly_eval(coefficients(fermat(2)), 2), 9);
  EXPECT_EQ(hilbert_poly_eval({1, 0, 0}, 0), 1);
  EXPECT_EQ(hilbert_poly_eval(coefficients(fermat(4)), 4), 34);
  EXPECT_EQ(oracle::fermat_colength_by_series(4, 4), 34);
  EXPECT_EQ(oracle::fermat_colength_by_series(2, 2), 9);
}

TEST(HilbertPoly, RoundTripFromPgMinusOne)
{
  auto data = sample_data(200, 3);
  for (int e = 2; e <= 8; ++e)
    data.push_back(fermat(e));
  for (const auto& d : data) {
    const auto c = coefficients(d);
    for (std::int64_t n = std::max<std::int64_t>(0, d.pg() - 1); n <= d.pg() + 10; ++n)
      EXPECT_EQ(hilbert_poly_eval(c, n), kato_colength(d, n + 1));
  }
}

TEST(Stabilization, Examples)
{
  for (int e = 2; e <= 8; ++e)
    EXPECT_EQ(stabilization_index(fermat(e)), e - 2 < 0 ? 0 : e - 2);
  EXPECT_EQ(stabilization_index(fermat(5)), 3);
  EXPECT_EQ(stabilization_index(rational()), 0);
  for (const auto& d : sample_data(200, 4))
    EXPECT_LE(stabilization_index(d), d.pg());
}

TEST(Epsilon, Examples)
{
  EXPECT_EQ(epsilon(0, 0, 0, 0), 0);
  EXPECT_EQ(epsilon(4, 1, 1, 0), 2);
  EXPECT_EQ(epsilon(fermat(4), 1), 2);
  EXPECT_EQ(epsilon(3, 3, 2, 2), 0);
  EXPECT_THROW(epsilon(3, 3, 2, 1), InconsistentDataError); // p_g-cycle forces h1ZW = h1W
  EXPECT_THROW(epsilon(3, 0, 0, 3), InconsistentDataError); // above p_g
  EXPECT_THROW(epsilon(3, 4, 0, 0), InconsistentDataError);
  EXPECT_THROW(epsilon(fermat(4), 0), DomainError);
}

TEST(Epsilon, PgCycleGivesZeroOnRandomData)
{
  for (const auto& d : sample_data(300, 5)) {
    for (int n = 1; n < 8; ++n) {
      const auto e = epsilon(d, n);
      EXPECT_GE(e, 0);
      EXPECT_LE(e, d.pg());
      if (d.h1(1) == d.pg()) {
        EXPECT_EQ(e, 0);
      }
    }
  }
}

TEST(PgIdealTest, Examples)
{
  EXPECT_TRUE(pg_ideal_test(rational()).verdict);
  EXPECT_TRUE(pg_ideal_test(fermat(2)).verdict);
  for (int e = 3; e <= 8; ++e)
    EXPECT_FALSE(pg_ideal_test(fermat(e)).verdict);
  const auto v = pg_ideal_test(fermat(4));
  EXPECT_FALSE(v.h1_attains_pg);
  EXPECT_FALSE(v.e1_identity);
  EXPECT_FALSE(v.e2_vanishes);
  // a p_g-ideal with p_g > 0: constant h1
  const NumericalIdealDatum pg_cycle(-4, 0, 1, {1, 1}, "pgcycle");
  const auto w = pg_ideal_test(pg_cycle);
  EXPECT_TRUE(w.verdict && w.h1_attains_pg && w.e1_identity && w.e2_vanishes);
}

TEST(PgIdealTest, CriteriaAgreeOnRandomData)
{
  for (const auto& d : sample_data(500, 6))
    EXPECT_NO_THROW(pg_ideal_test(d));
}

TEST(PgIdealTest, DisagreementIsReported)
{
  EXPECT_THROW(detail::agree(true, false, true), InternalInconsistencyError);
  EXPECT_NO_THROW(detail::agree(false, false, false));
}

TEST(Additivity, Examples)
{
  EXPECT_TRUE(pg_additivity_check(4, 4, {}));
  EXPECT_TRUE(pg_additivity_check(0, 0, {0, 0}));
  EXPECT_FALSE(pg_additivity_check(3, 1, {1}));
  EXPECT_THROW(pg_additivity_check(3, -1, {}), DomainError);
}

TEST(MultiRees, Examples)
{
  EXPECT_TRUE(multi_rees_verdict(rational(), rational(-6, 0)));
  EXPECT_FALSE(multi_rees_verdict(fermat(4), fermat(4)));
  EXPECT_TRUE(multi_rees_verdict(fermat(2), fermat(2)));
  EXPECT_THROW(multi_rees_verdict(fermat(2), fermat(4)), DomainError);
}

TEST(Validation, RejectsBadData)
{
  EXPECT_NE(inconsistency(0, 0, 0, {0}).find("negative"), std::string::npos);
  EXPECT_NE(inconsistency(-3, 0, 0, {0}).find("even"), std::string::npos);
  EXPECT_NE(inconsistency(-2, 0, 1, {1}).find("p_g + 1"), std::string::npos);
  EXPECT_NE(inconsistency(-2, 0, 1, {2, 2}).find("outside"), std::string::npos);
  EXPECT_NE(inconsistency(-4, 8, 4, {1, 0, 1, 1, 1}).find("increases"), std::string::npos);
  EXPECT_NE(inconsistency(-4, 8, 4, {3, 2, 0, 0, 0}).find("convex"), std::string::npos);
  // a late drop breaks convexity before the tail check sees it
  EXPECT_NE(inconsistency(-4, 8, 4, {2, 1, 1, 1, 0}).find("convex"), std::string::npos);
  EXPECT_NE(inconsistency(-4, -6, 0, {0}).find("e1bar"), std::string::npos);
  // colength l(A/I) = -(-2 + 2)/2 + 1 - 1 = 0
  EXPECT_NE(inconsistency(-2, 2, 1, {1, 1}).find("at least 1"), std::string::npos);
  EXPECT_THROW(fermat(4).h1(-1), DomainError);
}

TEST(Validation, RejectsCorruptedConvexity)
{
  // bend a convex profile: keep it monotone and in range but make one drop
  // larger than the previous one
  int rejected = 0;
  for (const auto& d : sample_data(400, 9)) {
    std::vector<std::int64_t> h1 = d.h1_values();
    h1.insert(h1.begin(), d.pg());
    bool done = false;
    for (std::size_t i = 1; i + 1 < h1.size() && !done; ++i)
      if (h1[i] < h1[i - 1] && h1[i - 1] > h1[i + 1]) {
        h1[i] = h1[i - 1]; // flat then a bigger drop
        done = h1[i - 1] - h1[i] < h1[i] - h1[i + 1];
      }
    if (!done)
      continue;
    h1.erase(h1.begin());
    try {
      NumericalIdealDatum(d.zz(), d.zk(), d.pg(), h1);
      ADD_FAILURE() << "corrupted datum accepted";
    } catch (const InconsistentDataError&) {
      ++rejected;
    }
  }
  EXPECT_GE(rejected, 20);
}

TEST(PowerDatum, MatchesScaledCycle)
{
  // A2 with Z = Z_f: the datum of 3Z from the graph equals the power datum
  const auto g = testgraphs::chain(2);
  const auto zf = fundamental_cycle(g);
  const auto d1 = rational_datum(g, zf);
  const auto d3 = power_datum(d1, 3);
  const auto direct = rational_datum(g, Integer(3) * zf);
  EXPECT_EQ(d3.zz(), direct.zz());
  EXPECT_EQ(d3.zk(), direct.zk());
  EXPECT_EQ(coefficients(d3), coefficients(direct));
}

TEST(PowerDatum, ColengthOfPowers)
{
  // closure of (I^n)^m is the closure of I^{nm}
  for (int e = 2; e <= 6; ++e) {
    const auto d = fermat(e);
    for (int n = 1; n <= 3; ++n) {
      const auto p = power_datum(d, n);
      for (int m = 1; m <= 5; ++m)
        EXPECT_EQ(kato_colength(p, m), kato_colength(d, n * m));
    }
  }
  EXPECT_THROW(power_datum(fermat(3), 0), DomainError);
}

TEST(GraphDatum, FromCycles)
{
  const auto f = fermat_datum(4);
  const DualGraph cone({{"E", -4, 3}}, {});
  const auto d = graph_datum(cone, Cycle({Integer(1)}), f.pg(), f.h1_values(), "cone");
  EXPECT_EQ(d.zz(), f.zz());
  EXPECT_EQ(d.zk(), f.zk());
  EXPECT_THROW(graph_datum(testgraphs::chain(2), Cycle({Integer(1), Integer(0)}), 0, {0}), DomainError);
  EXPECT_THROW(rational_datum(cone, Cycle({Integer(1)})), DomainError);
}

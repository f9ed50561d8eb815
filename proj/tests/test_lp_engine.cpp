#include "doctest.h"
#include "kpath/error.hpp"
#include "kpath/lp.hpp"
#include "kpath/oracle.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kpath;

namespace {

Graph sub3_star() { return subdivide(gen::multigraph(4, {{0, 1}, {0, 2}, {0, 3}}), 3); }

Rational r(long long p, long long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(r(2, 4) == r(1, 2));
  CHECK(r(1, -2) == r(-1, 2));
  CHECK((r(1, 3) + r(1, 6)).str() == "1/2");
  CHECK((r(5, 2) - r(1, 2)).str() == "2");
  CHECK(Rational::parse("-10/4") == r(-5, 2));
  CHECK(Rational::parse("7") == r(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("x"), InvalidInput);
  CHECK_THROWS_AS(r(1, 0), InvalidInput);
  CHECK(r(-7, 2).floor() == mpz_class(-4));
  CHECK(r(1, 3) < r(1, 2));

  // Products past 64 bits move to GMP and agree with mpq arithmetic.
  Rational big(1);
  mpq_class ref(1);
  for (int i = 0; i < 40; ++i) {
    big *= r(1'000'003, 7);
    ref *= mpq_class(1'000'003, 7);
    ref.canonicalize();
  }
  CHECK(big.to_mpq() == ref);
  for (int i = 0; i < 40; ++i) big /= r(1'000'003, 7);
  CHECK(big == r(1));
  CHECK(big.str() == "1");

  gen::Rng rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    long long a = gen::uniform(rng, -1'000'000, 1'000'000), b = gen::uniform(rng, 1, 1'000'000);
    long long c = gen::uniform(rng, -1'000'000, 1'000'000), d = gen::uniform(rng, 1, 1'000'000);
    mpq_class x(static_cast<long>(a), static_cast<long>(b)), y(static_cast<long>(c), static_cast<long>(d));
    x.canonicalize();
    y.canonicalize();
    CHECK((r(a, b) * r(c, d)).to_mpq() == x * y);
    CHECK((r(a, b) + r(c, d)).to_mpq() == x + y);
    CHECK((r(a, b) < r(c, d)) == (x < y));
  }
}

TEST_CASE("simplex on small programs") {
  SUBCASE("bounded maximum with its dual") {
    LpProblem p;
    p.sense = Sense::Maximize;
    p.objective = {r(3), r(2)};
    p.rows = {{r(1), r(1)}, {r(1), r(3)}};
    p.kinds = {RowKind::LessEqual, RowKind::LessEqual};
    p.rhs = {r(4), r(6)};
    auto s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.value == r(12));
    CHECK_FALSE(check_optimality(p, s).has_value());
  }
  SUBCASE("minimum with >= and = rows") {
    LpProblem p;
    p.sense = Sense::Minimize;
    p.objective = {r(1), r(1), r(1)};
    p.rows = {{r(1), r(1), r(0)}, {r(0), r(1), r(1)}, {r(1), r(0), r(1)}};
    p.kinds = {RowKind::GreaterEqual, RowKind::GreaterEqual, RowKind::Equal};
    p.rhs = {r(1), r(1), r(1)};
    auto s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    // Summing the three rows gives 2(x1 + x2 + x3) >= 3, attained by all halves.
    CHECK(s.value == r(3, 2));
    CHECK_FALSE(check_optimality(p, s).has_value());
  }
  SUBCASE("infeasible and unbounded") {
    LpProblem p;
    p.objective = {r(1)};
    p.rows = {{r(1)}, {r(1)}};
    p.kinds = {RowKind::LessEqual, RowKind::GreaterEqual};
    p.rhs = {r(1), r(2)};
    CHECK(solve_lp(p).status == LpStatus::Infeasible);
    LpProblem q;
    q.objective = {r(1), r(0)};
    q.rows = {{r(-1), r(1)}};
    q.kinds = {RowKind::LessEqual};
    q.rhs = {r(1)};
    CHECK(solve_lp(q).status == LpStatus::Unbounded);
  }
  SUBCASE("dimension mismatch") {
    LpProblem p;
    p.objective = {r(1)};
    p.rows = {{r(1), r(1)}};
    p.kinds = {RowKind::LessEqual};
    p.rhs = {r(1)};
    CHECK_THROWS_AS(p.validate(), InvalidInput);
  }
  SUBCASE("degenerate cycling example terminates") {
    // Beale's example, which cycles under the textbook largest-coefficient rule.
    LpProblem p;
    p.sense = Sense::Maximize;
    p.objective = {r(3, 4), r(-150), r(1, 50), r(-6)};
    p.rows = {{r(1, 4), r(-60), r(-1, 25), r(9)}, {r(1, 2), r(-90), r(-1, 50), r(3)}, {r(0), r(0), r(1), r(0)}};
    p.kinds = {RowKind::LessEqual, RowKind::LessEqual, RowKind::LessEqual};
    p.rhs = {r(0), r(0), r(1)};
    auto s = solve_lp(p);
    CHECK(s.status == LpStatus::Optimal);
    CHECK(s.value == r(1, 20));
  }
}

TEST_CASE("path LPs") {
  Graph c5 = gen::cycle(5);
  auto pack = packing_lp(c5, 2);
  CHECK(pack.variables() == 5);
  CHECK(pack.constraints() == 5);
  auto ps = solve_lp(pack);
  CHECK(ps.value == r(5, 2));
  // The all-halves vector is primal feasible for the packing and the dual cover.
  for (int i = 0; i < pack.constraints(); ++i) {
    Rational lhs;
    for (int j = 0; j < pack.variables(); ++j) lhs += pack.rows[i][j] * r(1, 2);
    CHECK(lhs <= pack.rhs[i]);
  }
  CHECK(nu_star(c5, 2) == r(5, 2));
  CHECK(tau_star(c5, 2) == r(5, 2));
  CHECK(solve_lp(packing_lp(gen::path(3), 3)).value == r(1));
  CHECK(solve_lp(covering_lp(gen::cycle(9), 3)).value == r(3));
  CHECK(nu_star(gen::cycle(9), 3) == r(3));
  CHECK(lp_text(pack).find("Maximize") != std::string::npos);

  gen::Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    Graph f = gen::random_forest(rng, gen::uniform(rng, 2, 12));
    int k = gen::uniform(rng, 2, 5);
    Rational v = nu_star(f, k);
    CHECK(v.is_integer());
    CHECK(v == r(oracle::nu(f, k)));
  }
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 8), 0.4);
    int k = gen::uniform(rng, 2, 4);
    Rational ps2 = nu_star(g, k), cs = tau_star(g, k);
    CHECK(ps2 == cs);
    CHECK(r(oracle::nu(g, k)) <= ps2);
    CHECK(ps2 <= r(oracle::tau(g, k)));
  }
}

TEST_CASE("certificate extraction") {
  auto c9 = lp_extract_certificates(gen::cycle(9), 3);
  CHECK(c9.in_class);
  CHECK(c9.matching.size() == 3);
  CHECK(c9.cover.size() == 3);

  auto s = lp_extract_certificates(subdivide(gen::multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 3), 3);
  CHECK(s.in_class);
  CHECK(s.matching.size() == 4);
  CHECK(s.cover.size() == 4);

  auto c5 = lp_extract_certificates(gen::cycle(5), 2);
  CHECK_FALSE(c5.in_class);
  CHECK(c5.reason.find("not in class") != std::string::npos);

  gen::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 8), 0.3);
    int k = gen::uniform(rng, 2, 4);
    if (!oracle::in_Gk(g, k)) continue;
    auto ex = lp_extract_certificates(g, k);
    REQUIRE(ex.in_class);
    CHECK(ex.matching.size() == oracle::nu(g, k));
    CHECK(ex.cover.size() == oracle::nu(g, k));
    CHECK_FALSE(check_matching(g, k, ex.matching).has_value());
    CHECK_FALSE(check_cover(g, k, ex.cover).has_value());
  }
}

TEST_CASE("determinants and total unimodularity") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = gen::uniform(rng, 0, 6);
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (auto& row : m) {
      for (auto& x : row) x = gen::uniform(rng, -3, 3);
    }
    CHECK(determinant(m) == oracle::laplace(m));
  }

  auto p3 = incidence_matrix(gen::path(3), 3);
  CHECK(p3.cols() == 1);
  CHECK(p3.entries == std::vector<std::vector<int>>{{1}, {1}, {1}});
  CHECK_FALSE(find_non_tu_witness(p3, 3).has_value());

  auto star = incidence_matrix(sub3_star(), 3);
  auto w = find_non_tu_witness(star, 3);
  REQUIRE(w.has_value());
  CHECK(w->rows.size() <= 3);
  CHECK(std::abs(w->determinant) >= 2);
  std::vector<std::vector<long long>> sub;
  for (int i : w->rows) {
    std::vector<long long> row;
    for (int j : w->cols) row.push_back(star.entries[i][j]);
    sub.push_back(row);
  }
  CHECK(oracle::laplace(sub) == w->determinant);

  // Bipartite incidence matrices are totally unimodular.
  for (int trial = 0; trial < 20; ++trial) {
    Graph t = gen::random_tree(rng, gen::uniform(rng, 2, 7));
    CHECK_FALSE(find_non_tu_witness(incidence_matrix(t, 2), 4).has_value());
  }
  CHECK_FALSE(find_non_tu_witness(incidence_matrix(gen::cycle(6), 2), 6).has_value());
  CHECK(find_non_tu_witness(incidence_matrix(gen::cycle(3), 2), 3).has_value());
}

#include <random>

#include "doctest.h"
#include "oracles.h"
#include "torsionk/cohomology.h"
#include "torsionk/fixtures.h"
#include "torsionk/lcs.h"

using namespace torsionk;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

// Exhaustive maximum of satisfied constraints, written against the raw matrix.
std::pair<std::int64_t, oracle::Vec> oracle_best(const LinearConstraintSystem& lcs) {
  const auto d = static_cast<std::int64_t>(lcs.modulus());
  std::vector<oracle::Vec> rows;
  const IntMatrix m = lcs.matrix();
  for (std::size_t k = 0; k < m.rows(); ++k) {
    oracle::Vec row;
    for (std::size_t v = 0; v < m.cols(); ++v) row.push_back(static_cast<std::int64_t>(m(k, v)));
    rows.push_back(row);
  }
  std::vector<std::int64_t> b;
  const ZdVector rhs = lcs.rhs();
  for (const auto& x : rhs.coords()) b.push_back(static_cast<std::int64_t>(x));
  std::int64_t best = -1;
  oracle::Vec arg;
  oracle::for_each_vector(d, lcs.num_variables(), [&](const oracle::Vec& x) {
    const auto mx = oracle::mat_vec_mod(rows, x, d);
    std::int64_t sat = 0;
    for (std::size_t k = 0; k < mx.size(); ++k) sat += mx[k] == b[k];
    if (sat > best) {
      best = sat;
      arg = x;
    }
  });
  return {best, arg};
}

LinearConstraintSystem random_system(std::mt19937& rng, std::int64_t d) {
  std::uniform_int_distribution<int> vars(1, 5), rows(1, 5), coeff(0, static_cast<int>(d) - 1);
  const int c = vars(rng), r = rows(rng);
  std::vector<std::string> names;
  for (int i = 0; i < c; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Constraint> cons;
  std::vector<bool> used(c, false);
  for (int k = 0; k < r; ++k) {
    Constraint con{"", {}, coeff(rng)};
    for (int v = 0; v < c; ++v) {
      const int a = coeff(rng);
      if (a != 0) {
        con.coeffs.emplace_back(v, a);
        used[v] = true;
      }
    }
    if (con.coeffs.empty()) {
      con.coeffs.emplace_back(k % c, 1);
      used[k % c] = true;
    }
    cons.push_back(con);
  }
  for (int v = 0; v < c; ++v) {
    if (!used[v]) cons.front().coeffs.emplace_back(v, 1);
  }
  return LinearConstraintSystem(d, names, cons);
}

}  // namespace

TEST_CASE("system validation") {
  CHECK_THROWS_AS(LinearConstraintSystem(1, {"x"}, {{"", {{0, 1}}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearConstraintSystem(2, {"x"}, {{"", {{0, 2}}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearConstraintSystem(2, {"x", "y"}, {{"", {{0, 1}}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearConstraintSystem(2, {"x", "x"}, {{"", {{0, 1}, {1, 1}}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearConstraintSystem(2, {"x"}, {{"", {{0, 1}, {0, 1}}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearConstraintSystem(2, {"x"}, {}), std::invalid_argument);
  const LinearConstraintSystem l(3, {"x", "y"}, {{"", {{1, 5}, {0, -1}}, 7}});
  CHECK(l.constraints()[0].coeffs == std::vector<std::pair<std::size_t, Integer>>{{0, 2}, {1, 2}});
  CHECK(l.constraints()[0].rhs == 1);
  CHECK(l.constraint_label(0) == "r1");
}

TEST_CASE("hypergraphs") {
  const Fixture sq = builtin_fixture("mermin_square");
  const auto [h, tau] = hypergraph_of(sq.lcs);
  CHECK(h.vertices.size() == 9);
  CHECK(h.edges.size() == 6);
  for (const auto& e : h.edges) CHECK(e.weights.size() == 3);
  CHECK(tau == ZdVector(2, ints({0, 0, 0, 0, 0, 1})));
  CHECK(h.edges[5].name == "col3");
  std::vector<std::string> col3;
  for (const auto& [v, w] : h.edges[5].weights) col3.push_back(h.vertices[v]);
  CHECK(col3 == std::vector<std::string>{"XX", "ZZ", "YY"});
  CHECK(hypergraph_boundary(h, 2) == sq.lcs.matrix().transpose());

  const Fixture st = builtin_fixture("mermin-star");
  const auto star = hypergraph_of(st.lcs);
  CHECK(star.hypergraph.vertices.size() == 10);
  CHECK(star.hypergraph.edges.size() == 5);
  for (const auto& e : star.hypergraph.edges) CHECK(e.weights.size() == 4);
  CHECK(star.tau == ZdVector(2, ints({0, 0, 0, 0, 1})));
  CHECK(star.hypergraph.edges[4].name == "horizontal");

  const LinearConstraintSystem pair(2, {"v1", "v2"}, {{"", {{0, 1}, {1, 1}}, 1}});
  const auto p = hypergraph_of(pair);
  CHECK(p.tau == ZdVector(2, ints({1})));
  CHECK(hypergraph_boundary(p.hypergraph, 2) == IntMatrix{{1}, {1}});
  const Hypergraph single{4, {"v"}, {{"e", {{0, 2}}}}};
  CHECK(hypergraph_boundary(single, 4) == IntMatrix{{2}});
}

TEST_CASE("scalar solutions and classical value") {
  const Fixture sq = builtin_fixture("mermin_square");
  CHECK_FALSE(scalar_solution(sq.lcs).has_value());
  const auto sq_value = classical_value(sq.lcs);
  CHECK(sq_value.satisfied == 5);
  CHECK(sq_value.to_string() == "5/6");
  CHECK(sq_value.satisfied == oracle_best(sq.lcs).first);

  const Fixture st = builtin_fixture("mermin_star");
  CHECK_FALSE(scalar_solution(st.lcs).has_value());
  CHECK(classical_value(st.lcs).to_string() == "4/5");
  CHECK(classical_value(st.lcs).satisfied == oracle_best(st.lcs).first);

  const LinearConstraintSystem pair(2, {"v1", "v2"}, {{"", {{0, 1}, {1, 1}}, 1}});
  CHECK(*scalar_solution(pair) == ZdVector(2, ints({1, 0})));
  CHECK(classical_value(pair).to_string() == "1");
  CHECK(classical_value(pair).maximizer == ZdVector(2, ints({0, 1})));

  const LinearConstraintSystem homogeneous(4, {"a", "b", "c"}, {{"", {{0, 1}, {1, 2}}, 0}, {"", {{2, 3}}, 0}});
  CHECK(*scalar_solution(homogeneous) == ZdVector::zeros(4, 3));

  const LinearConstraintSystem big(2, [] {
    std::vector<std::string> v;
    for (int i = 0; i < 30; ++i) v.push_back("v" + std::to_string(i));
    return v;
  }(), [] {
    Constraint c{"", {}, 0};
    for (std::size_t i = 0; i < 30; ++i) c.coeffs.emplace_back(i, 1);
    return std::vector<Constraint>{c};
  }());
  CHECK_THROWS_AS(classical_value(big), std::length_error);
}

TEST_CASE("least maximizer matches the oracle's lexicographic scan") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto l = random_system(rng, 2 + trial % 3);
    const auto [best, arg] = oracle_best(l);
    const auto v = classical_value(l);
    CHECK(v.satisfied == best);
    std::vector<Integer> expected(arg.begin(), arg.end());
    CHECK(v.maximizer.coords() == expected);
  }
}

TEST_CASE("canonical realization") {
  const LinearConstraintSystem pair(2, {"v1", "v2"}, {{"", {{0, 1}, {1, 1}}, 1}});
  const CW2Complex x = canonical_realization(hypergraph_of(pair).hypergraph, 2);
  CHECK(x.count(0) == 1);
  CHECK(x.count(1) == 2);
  CHECK(x.two_cells()[0].word == std::vector<WordLetter>{{"v1", 1}, {"v2", 1}});

  const LinearConstraintSystem weighted(5, {"a", "b"}, {{"", {{1, -1}, {0, 3}}, 2}});
  const CW2Complex w = canonical_realization(hypergraph_of(weighted).hypergraph, 5);
  CHECK(w.two_cells()[0].word == std::vector<WordLetter>{{"a", 3}, {"b", 4}});
  CHECK_NOTHROW(check_realization(w, weighted));

  const Fixture sq = builtin_fixture("mermin_square");
  const CW2Complex c = canonical_realization(hypergraph_of(sq.lcs).hypergraph, 2);
  CHECK(c.count(0) == 1);
  CHECK(c.count(1) == 9);
  CHECK(c.count(2) == 6);
  const auto map = check_realization(c, sq.lcs);
  CHECK_FALSE(class_of(c, 2, 2, map.two_cochain(sq.lcs.rhs())).is_zero());
}

TEST_CASE("published tori") {
  struct Shape {
    const char* name;
    std::size_t v, e, f;
  };
  for (const Shape s : {Shape{"mermin_square", 3, 9, 6}, Shape{"mermin_star", 5, 10, 5},
                        Shape{"mermin_refined", 5, 15, 10}}) {
    CAPTURE(s.name);
    const Fixture fx = builtin_fixture(s.name);
    CHECK(fx.torus.count(0) == s.v);
    CHECK(fx.torus.count(1) == s.e);
    CHECK(fx.torus.count(2) == s.f);
    CHECK(fx.torus.euler_characteristic() == 0);
    const auto map = check_realization(fx.torus, fx.lcs);
    const auto tau = map.two_cochain(fx.lcs.rhs());
    CHECK_FALSE(class_of(fx.torus, 2, 2, tau).is_zero());
    CHECK_FALSE(scalar_solution(fx.lcs).has_value());
    CHECK(pi1_presentation(fx.torus).status == Pi1Status::kNontrivial);
    CHECK(pi1_presentation(fx.torus).abelianization_free_rank == 2);

    // coboundaries of 0-cochains are zero classes in degree 1
    std::vector<Integer> a;
    for (std::size_t i = 0; i < fx.torus.count(0); ++i) a.push_back(static_cast<long long>(i * i + 1));
    CHECK(class_of(fx.torus, 4, 1, ZdVector(4, coboundary(fx.torus, 0).apply(a))).is_zero());

    for (long long k : {2, 3, 4, 6}) {
      CAPTURE(k);
      CHECK(cohomology(fx.torus, k, 1).invariant_factors() == ints({k, k}));
      CHECK(cohomology(fx.torus, k, 2).invariant_factors() == ints({k}));
    }
  }
  const Fixture sq = builtin_fixture("mermin_square");
  CHECK(brute_force_cohomology(sq.torus, 2, 2).invariant_factors() == ints({2}));
  CHECK(brute_force_cohomology(sq.torus, 2, 1).invariant_factors() == ints({2, 2}));
  const auto refined = builtin_fixture("mermin_refined");
  std::vector<std::string> names;
  for (const auto& e : refined.torus.one_cells()) names.push_back(e.name);
  for (const char* n : {"XYI", "YXI", "XXI", "YYI", "ZZI"}) {
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }
  CHECK_THROWS_AS(builtin_fixture("mermin_cube"), std::out_of_range);
}

TEST_CASE("realization mismatches are rejected") {
  const Fixture sq = builtin_fixture("mermin_square");
  const Fixture st = builtin_fixture("mermin_star");
  CHECK_THROWS_AS(check_realization(st.torus, sq.lcs), std::invalid_argument);
  // same cells, one attaching word swapped to another constraint's variables
  std::vector<TwoCell> cells = sq.torus.two_cells();
  std::swap(cells[0].word, cells[1].word);
  const CW2Complex swapped(sq.torus.zero_cells(), sq.torus.one_cells(), cells);
  CHECK_THROWS_AS(check_realization(swapped, sq.lcs), std::invalid_argument);
}

TEST_CASE("scalar solvability equals vanishing of [tau]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const auto l = random_system(rng, 2 + trial % 3);
    const auto [h, tau] = hypergraph_of(l);
    const CW2Complex x = canonical_realization(h, l.modulus());
    const bool solvable = scalar_solution(l).has_value();
    CHECK(solvable == class_of(x, l.modulus(), 2, tau).is_zero());
    CHECK(solvable == classical_value(l).perfect());
    if (solvable) {
      const auto sol = *scalar_solution(l);
      CHECK(ZdVector(l.modulus(), l.matrix().apply(sol.coords())) == l.rhs());
    }
  }
}

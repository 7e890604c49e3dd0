#include <random>

#include "doctest.h"
#include "oracles.h"
#include "torsionk/cohomology.h"
#include "torsionk/complex.h"

using namespace torsionk;
namespace sc = torsionk::standard_complexes;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

std::vector<oracle::Vec> rows_of(const IntMatrix& a, std::int64_t k) {
  std::vector<oracle::Vec> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    oracle::Vec row;
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(static_cast<std::int64_t>(mod(a(r, c), k)));
    out.push_back(row);
  }
  return out;
}

// Cohomology straight from the definition, using the test-side oracle.
std::vector<Integer> oracle_cohomology(const CW2Complex& x, std::int64_t k, int degree) {
  const std::size_t n = x.count(degree);
  const auto below = rows_of(coboundary(x, degree - 1), k);
  const auto above = degree == 1 ? rows_of(coboundary(x, 1), k) : std::vector<oracle::Vec>{};
  std::set<oracle::Vec> boundaries;
  oracle::for_each_vector(k, x.count(degree - 1), [&](const oracle::Vec& a) {
    boundaries.insert(oracle::mat_vec_mod(below, a, k));
  });
  std::vector<oracle::Vec> cycles;
  oracle::for_each_vector(k, n, [&](const oracle::Vec& z) {
    const auto dz = oracle::mat_vec_mod(above, z, k);
    if (std::all_of(dz.begin(), dz.end(), [](auto c) { return c == 0; })) cycles.push_back(z);
  });
  const auto f = oracle::subquotient_factors(cycles, boundaries, k);
  return {f.begin(), f.end()};
}

CW2Complex random_one_vertex_complex(std::mt19937& rng) {
  std::uniform_int_distribution<int> loops(1, 3), faces(0, 3), length(0, 4), exponent(-2, 2);
  const int n1 = loops(rng);
  std::vector<OneCell> cells;
  for (int i = 0; i < n1; ++i) cells.push_back({"e" + std::to_string(i), "o", "o"});
  std::uniform_int_distribution<int> pick(0, n1 - 1);
  std::vector<TwoCell> two;
  const int n2 = faces(rng);
  for (int f = 0; f < n2; ++f) {
    TwoCell face{"f" + std::to_string(f), {}};
    for (int l = length(rng); l > 0; --l) {
      int e = 0;
      while (e == 0) e = exponent(rng);
      face.word.push_back({"e" + std::to_string(pick(rng)), e});
    }
    two.push_back(face);
  }
  return CW2Complex({"o"}, cells, two);
}

CW2Complex triangle_disk() {
  return CW2Complex({"A", "B", "C"}, {{"ab", "A", "B"}, {"bc", "B", "C"}, {"ca", "C", "A"}},
                    {{"disk", {{"ab", 1}, {"bc", 1}, {"ca", 1}}}});
}

}  // namespace

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(CW2Complex({}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CW2Complex({"o", "o"}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CW2Complex({"o"}, {{"a", "o", "p"}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CW2Complex({"o", "p"}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CW2Complex({"o", "p"}, {{"a", "o", "p"}}, {{"f", {{"a", 1}}}}), std::invalid_argument);
  CHECK_THROWS_AS(CW2Complex({"o", "p"}, {{"a", "o", "p"}}, {{"f", {{"a", 2}}}}), std::invalid_argument);
  CHECK_THROWS_AS(CW2Complex({"o"}, {{"a", "o", "o"}}, {{"f", {{"b", 1}}}}), std::invalid_argument);
  CHECK_THROWS_AS(CW2Complex({"o"}, {{"a", "o", "o"}}, {{"f", {{"a", 0}}}}), std::invalid_argument);
  CHECK_NOTHROW(CW2Complex({"o", "p"}, {{"a", "o", "p"}}, {{"f", {{"a", 1}, {"a", -1}}}}));
}

TEST_CASE("chain data") {
  const auto torus = chain_data(sc::torus());
  CHECK(torus.d1.is_zero());
  CHECK(torus.d2.is_zero());
  const auto disk = chain_data(triangle_disk());
  CHECK(disk.d1 == IntMatrix{{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}});
  CHECK(disk.d2 == IntMatrix{{1}, {1}, {1}});
  CHECK(coboundary(triangle_disk(), 1) == IntMatrix{{1, 1, 1}});
  CHECK(sc::torus().euler_characteristic() == 0);
  CHECK(sc::sphere().euler_characteristic() == 2);
  CHECK(sc::projective_plane().euler_characteristic() == 1);
  CHECK_THROWS_AS(coboundary(sc::torus(), 2), std::invalid_argument);
}

TEST_CASE("cohomology of standard complexes") {
  struct Case {
    CW2Complex x;
    long long k;
    std::vector<Integer> h1, h2;
  };
  const std::vector<Case> cases = {
      {sc::torus(), 2, ints({2, 2}), ints({2})},
      {sc::torus(), 6, ints({6, 6}), ints({6})},
      {sc::sphere(), 5, {}, ints({5})},
      {sc::wedge_of_circles(2), 3, ints({3, 3}), {}},
      {sc::projective_plane(), 2, ints({2}), ints({2})},
      {sc::projective_plane(), 3, {}, {}},
      {sc::projective_plane(), 4, ints({2}), ints({2})},
      {sc::klein_bottle(), 2, ints({2, 2}), ints({2})},
      {sc::klein_bottle(), 3, ints({3}), {}},
      {sc::point(), 7, {}, {}},
      {triangle_disk(), 4, {}, {}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.k);
    CHECK(cohomology(c.x, c.k, 1).invariant_factors() == c.h1);
    CHECK(cohomology(c.x, c.k, 2).invariant_factors() == c.h2);
  }
  CHECK(cohomology(sc::torus(), 1, 2).is_trivial());
  CHECK(cohomology(sc::torus(), 1, 1).is_trivial());
  CHECK_THROWS_AS(cohomology(sc::torus(), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(cohomology(sc::torus(), 0, 1), std::invalid_argument);
}

TEST_CASE("brute force agrees with the definition and with the Smith computation") {
  std::mt19937 rng(11);
  std::vector<CW2Complex> complexes = {sc::torus(), sc::sphere(), sc::projective_plane(), sc::klein_bottle(),
                                       sc::wedge_of_circles(3), triangle_disk()};
  for (int i = 0; i < 60; ++i) complexes.push_back(random_one_vertex_complex(rng));
  for (const auto& x : complexes) {
    for (long long k : {2, 3, 4, 6}) {
      for (int degree : {1, 2}) {
        CAPTURE(k);
        CAPTURE(degree);
        const auto expected = oracle_cohomology(x, k, degree);
        CHECK(brute_force_cohomology(x, k, degree).invariant_factors() == expected);
        CHECK(cohomology(x, k, degree).invariant_factors() == expected);
      }
    }
  }
  CHECK_THROWS_AS(brute_force_cohomology(sc::wedge_of_circles(30), 2, 1), std::length_error);
}

TEST_CASE("classes") {
  const CW2Complex torus = sc::torus();
  const auto gen = class_of(torus, 4, 2, ZdVector(4, ints({1})));
  CHECK(gen.coordinates == ints({1}));
  CHECK_FALSE(gen.is_zero());
  CHECK(class_of(torus, 4, 2, ZdVector(4, ints({0}))).is_zero());

  // x4 on Z/8 -> Z/8 then reduction to Z/4
  const auto eight = class_of(torus, 8, 2, ZdVector(8, ints({3})));
  CHECK(push_class(torus, eight, multiplication_by(8, 4)).coordinates == ints({4}));
  CHECK(push_class(torus, eight, cotorsion_projection(8, 4)).coordinates == ints({3}));
  CHECK(push_class(torus, eight, cotorsion_projection(8, 2)).coordinates == ints({1}));
  CHECK_THROWS_AS(push_class(torus, eight, multiplication_by(4, 2)), std::invalid_argument);

  // RP^2: delta(a) = 2f, so 2f is a coboundary over Z/4 but f is not.
  const CW2Complex rp2 = sc::projective_plane();
  CHECK_FALSE(class_of(rp2, 2, 2, ZdVector(2, ints({1}))).is_zero());
  CHECK(class_of(rp2, 4, 2, ZdVector(4, ints({2}))).is_zero());
  CHECK_FALSE(class_of(rp2, 4, 2, ZdVector(4, ints({1}))).is_zero());

  // Coboundaries of 1-cochains are zero classes on random complexes.
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    const CW2Complex x = random_one_vertex_complex(rng);
    std::uniform_int_distribution<int> entry(0, 5);
    std::vector<Integer> a;
    for (std::size_t j = 0; j < x.count(1); ++j) a.push_back(entry(rng));
    const auto b = coboundary(x, 1).apply(a);
    CHECK(class_of(x, 6, 2, ZdVector(6, b)).is_zero());
  }

  CHECK_THROWS_AS(class_of(torus, 2, 2, ZdVector(2, ints({1, 0}))), std::invalid_argument);
  CHECK_THROWS_AS(class_of(torus, 2, 2, ZdVector(4, ints({1}))), std::invalid_argument);
  CHECK_THROWS_AS(class_of(triangle_disk(), 2, 1, ZdVector(2, ints({1, 0, 0}))), std::invalid_argument);
  CHECK(class_of(triangle_disk(), 2, 1, ZdVector(2, ints({1, 1, 0}))).is_zero());
}

TEST_CASE("fundamental group presentations") {
  const auto torus = pi1_presentation(sc::torus());
  CHECK(torus.generators == std::vector<std::string>{"x", "z"});
  CHECK(torus.abelianization_free_rank == 2);
  CHECK(torus.status == Pi1Status::kNontrivial);

  CHECK(pi1_presentation(sc::sphere()).status == Pi1Status::kTrivial);
  CHECK(pi1_presentation(sc::point()).status == Pi1Status::kTrivial);
  CHECK(pi1_presentation(sc::wedge_of_circles(2)).status == Pi1Status::kNontrivial);

  const auto rp2 = pi1_presentation(sc::projective_plane());
  CHECK(rp2.status == Pi1Status::kNontrivial);
  CHECK(rp2.abelianization_torsion.invariant_factors() == ints({2}));
  CHECK(rp2.relators == std::vector<std::vector<WordLetter>>{{{"a", 2}}});

  const auto disk = pi1_presentation(triangle_disk());
  CHECK(disk.generators == std::vector<std::string>{"bc"});
  CHECK(disk.status == Pi1Status::kTrivial);

  // <a, b | a b, b> collapses by Tietze moves.
  const CW2Complex collapsing({"o"}, {{"a", "o", "o"}, {"b", "o", "o"}},
                              {{"r", {{"a", 1}, {"b", 1}}}, {"s", {{"b", 1}}}});
  CHECK(pi1_presentation(collapsing).status == Pi1Status::kTrivial);

  // <a, b | a^2 b^-3, a^3 b^-4> is perfect but no generator occurs once.
  const CW2Complex stuck({"o"}, {{"a", "o", "o"}, {"b", "o", "o"}},
                         {{"r", {{"a", 2}, {"b", -3}}}, {"s", {{"a", 3}, {"b", -4}}}});
  const auto p = pi1_presentation(stuck);
  CHECK(p.abelianization_trivial);
  CHECK(p.status == Pi1Status::kAbelianizationTrivial);
  CHECK(to_string(p.status) == "abelianization_trivial");
}

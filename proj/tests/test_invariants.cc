#include <random>
#include <set>

#include "doctest.h"
#include "torsionk/fixtures.h"
#include "torsionk/invariants.h"

using namespace torsionk;
namespace sc = torsionk::standard_complexes;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

std::vector<Integer> cyclic(long long k) { return k == 1 ? std::vector<Integer>{} : ints({k}); }

// Two 2-cells glued along one loop: a 2-sphere realizing v = 0, v = 1 over Z/2.
CW2Complex two_disk_sphere() {
  return CW2Complex({"o"}, {{"v", "o", "o"}}, {{"lower", {{"v", 1}}}, {"upper", {{"v", 1}}}});
}

LinearConstraintSystem sphere_system() {
  return LinearConstraintSystem(2, {"v"}, {{"lower", {{0, 1}}, 0}, {"upper", {{0, 1}}, 1}});
}

std::vector<CW2Complex> complexes() {
  return {sc::torus(),          sc::sphere(), sc::projective_plane(), sc::klein_bottle(), sc::wedge_of_circles(3),
          two_disk_sphere(),    builtin_fixture("mermin_square").torus, builtin_fixture("mermin_star").torus};
}

}  // namespace

TEST_CASE("homotopy groups of kmu_d") {
  CHECK(homotopy_group(SpectrumId::kmud(2), 1).group.invariant_factors() == ints({2}));
  CHECK(homotopy_group(SpectrumId::kmud(7), 1).group.invariant_factors() == ints({7}));
  CHECK(homotopy_group(SpectrumId::kmud(7), 0).group.is_trivial());
  CHECK(homotopy_group(SpectrumId::kmud(7), 2).group.is_trivial());
  CHECK_THROWS_AS(homotopy_group(SpectrumId::kmud(7), 3), std::out_of_range);
  CHECK_THROWS_AS(SpectrumId::kmud(1), std::invalid_argument);
}

TEST_CASE("homotopy groups of C(d,m) against enumeration of x m on Z/d") {
  for (long long d = 2; d <= 24; ++d) {
    for (long long m = 1; m <= 24; ++m) {
      long long kernel = 0;
      std::set<long long> image;
      for (long long x = 0; x < d; ++x) {
        kernel += (m * x) % d == 0;
        image.insert((m * x) % d);
      }
      const long long cokernel = d / static_cast<long long>(image.size());
      const auto s = SpectrumId::cdm(d, m);
      // subgroups and quotients of a cyclic group are cyclic, so the order fixes them
      REQUIRE(homotopy_group(s, 1).group.invariant_factors() == cyclic(cokernel));
      REQUIRE(homotopy_group(s, 2).group.invariant_factors() == cyclic(kernel));
      REQUIRE(homotopy_group(s, 1).exact);
    }
  }
  CHECK(homotopy_group(SpectrumId::cdm(2, 4), 2).group.invariant_factors() == ints({2}));
  CHECK(homotopy_group(SpectrumId::cdm(2, 8), 2).group.invariant_factors() == ints({2}));
  CHECK(homotopy_group(SpectrumId::cdm(6, 4), 0).group.is_trivial());
  CHECK_THROWS_AS(homotopy_group(SpectrumId::cdm(6, 4), 3), std::out_of_range);
}

TEST_CASE("ko_sym table") {
  // pi_{8k+e}: 0, Z/2, Z/2, Z/2^{4k+3}, 0, 0, 0, Z/2^{4k+4}
  const std::vector<std::vector<Integer>> expected = {
      {}, ints({2}), ints({2}), ints({8}),   {}, {}, {}, ints({16}),
      {}, ints({2}), ints({2}), ints({128}), {}, {}, {}, ints({256}),
  };
  for (long long r = 0; r < 16; ++r) {
    CAPTURE(r);
    CHECK(homotopy_group(SpectrumId::kosym(), r).group.invariant_factors() == expected[static_cast<std::size_t>(r)]);
  }
  CHECK(homotopy_group(SpectrumId::kosym(), 11).group.to_string() == "Z/128");
  CHECK(homotopy_group(SpectrumId::kosym(), 8 * 10 + 7).order == Integer(1) << 44);
  CHECK_THROWS_AS(homotopy_group(SpectrumId::kosym(), -1), std::out_of_range);
}

TEST_CASE("real variant") {
  const auto pi2 = homotopy_group(SpectrumId::creal(4), 2);
  CHECK_FALSE(pi2.exact);
  CHECK(pi2.order == 4);
  CHECK(pi2.subquotient_factors == ints({2, 2}));
  REQUIRE(pi2.candidates.size() == 2);
  CHECK(pi2.candidates[0].invariant_factors() == ints({4}));
  CHECK(pi2.candidates[1].invariant_factors() == ints({2, 2}));
  CHECK(homotopy_group(SpectrumId::creal(4), 1).group.invariant_factors() == ints({2}));
  CHECK(homotopy_group(SpectrumId::creal(3), 1).group.is_trivial());
  CHECK(homotopy_group(SpectrumId::creal(3), 2).group.is_trivial());
  CHECK(homotopy_group(SpectrumId::creal(3), 2).exact);
  CHECK_THROWS_AS(homotopy_group(SpectrumId::creal(4), 0), std::out_of_range);
  CHECK_THROWS_AS(homotopy_group(SpectrumId::creal(4), 3), std::out_of_range);
}

TEST_CASE("C(d,m) cohomology groups") {
  const auto torus = cdm_group(sc::torus(), 2, 4);
  REQUIRE(torus.exact());
  CHECK(torus.total->invariant_factors() == ints({2, 2, 2}));
  CHECK(torus.order == 8);
  for (long long n = 1; n <= 5; ++n) {
    CHECK(cdm_group(sc::torus(), 2, Integer(1) << n).total->invariant_factors() == ints({2, 2, 2}));
  }
  const auto sphere = cdm_group(sc::sphere(), 2, 2);
  CHECK(sphere.total->invariant_factors() == ints({2}));

  for (const auto& x : complexes()) {
    for (auto [d, m] : {std::pair{3, 4}, std::pair{2, 3}, std::pair{5, 6}, std::pair{4, 9}}) {
      const auto g = cdm_group(x, d, m);
      REQUIRE(g.exact());
      CHECK(g.total->is_trivial());
      CHECK(g.order == 1);
    }
    for (long long d = 2; d <= 6; ++d) {
      for (long long m = 1; m <= 12; ++m) {
        const auto g = cdm_group(x, d, m);
        CHECK(g.order == cohomology(x, g.g, 1).order() * cohomology(x, g.g, 2).order());
        if (m % d == 0) {
          CHECK(g.total->same_structure(direct_sum(cohomology(x, d, 1), cohomology(x, d, 2))));
        }
        CHECK(g.exact() == (m % d == 0 || g.g == 1));
      }
    }
  }
  const auto unresolved = cdm_group(sc::torus(), 4, 6);
  CHECK_FALSE(unresolved.exact());
  CHECK(unresolved.order == 8);
}

TEST_CASE("Mermin class") {
  const Fixture sq = builtin_fixture("mermin_square");
  for (std::size_t extra = 0; extra <= 2; ++extra) {
    const auto t = stabilize(sq.solution, extra);
    const Integer m = t.dimension();
    const auto cls = class_of_solution(sq.torus, sq.lcs, t, m);
    CHECK(cls.notation() == "(0,0;1)");
    CHECK(cls.h1.is_zero());
    CHECK_FALSE(cls.h2.is_zero());
    CHECK(cls.h2.group.invariant_factors() == ints({2}));
    CHECK(cls.h1.group.invariant_factors() == ints({2, 2}));
  }
  const Fixture st = builtin_fixture("mermin_star");
  CHECK(class_of_solution(st.torus, st.lcs, st.solution, 8).notation() == "(0,0;1)");
  const Fixture ref = builtin_fixture("mermin_refined");
  CHECK(class_of_solution(ref.torus, ref.lcs, ref.solution, 8).notation() == "(0,0;1)");

  CHECK_THROWS_AS(class_of_solution(sq.torus, sq.lcs, sq.solution, 8), std::invalid_argument);
  CHECK_THROWS_AS(class_of_solution(st.torus, sq.lcs, sq.solution, 4), std::invalid_argument);
  std::map<std::string, PauliElement> ident;
  for (const auto& v : sq.lcs.variables()) ident.emplace(v, PauliElement::identity(2, 2));
  CHECK_THROWS_AS(class_of_solution(sq.torus, sq.lcs, OperatorSolution::pauli(2, 2, ident), 4), UnverifiedSolution);
}

TEST_CASE("h1 detects determinants") {
  // x + y = 0 over Z/2 with A = B = Z: det Z = -1 on both loops
  const LinearConstraintSystem l(2, {"x", "y"}, {{"", {{0, 1}, {1, 1}}, 0}});
  const CW2Complex x = canonical_realization(hypergraph_of(l).hypergraph, 2);
  const auto t = OperatorSolution::pauli(2, 1, {{"x", PauliElement::from_label("Z")}, {"y", PauliElement::from_label("Z")}});
  const auto cls = class_of_solution(x, l, t, 2);
  CHECK_FALSE(cls.h1.is_zero());
  CHECK(cls.h2.is_zero());
  // stabilizing squares every determinant
  CHECK(class_of_solution(x, l, stabilize(t, 1), 4).h1.is_zero());
  // over U(1) the H^1 piece has coefficients Z/gcd(2,1) = 0
  const auto odd = class_of_solution(x, l, scalar_solution_to_operator(l, ZdVector(2, ints({1, 1}))), 1);
  CHECK(odd.g == 1);
  CHECK(odd.notation() == "(;)");
}

TEST_CASE("scalar solutions have vanishing h2") {
  std::mt19937 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t d = 2 + trial % 3;
    std::uniform_int_distribution<std::int64_t> residue(0, d - 1);
    std::vector<Constraint> cons;
    for (std::size_t k = 0; k < 3; ++k) {
      Constraint c{"", {}, residue(rng)};
      for (std::size_t v = 0; v < 3; ++v) {
        auto a = residue(rng);
        if (v == k && a == 0) a = 1;
        if (a != 0) c.coeffs.emplace_back(v, a);
      }
      cons.push_back(c);
    }
    const LinearConstraintSystem l(d, {"a", "b", "c"}, cons);
    const CW2Complex x = canonical_realization(hypergraph_of(l).hypergraph, d);
    const auto sol = scalar_solution(l);
    CHECK(sol.has_value() == class_of(x, d, 2, l.rhs()).is_zero());
    if (!sol) continue;
    ++checked;
    const auto cls = class_of_solution(x, l, scalar_solution_to_operator(l, *sol), 1);
    CHECK(cls.h2.is_zero());
  }
  CHECK(checked > 5);
}

TEST_CASE("certificates") {
  const Fixture sq = builtin_fixture("mermin_square");
  auto ids = [](const std::vector<Certificate>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.id);
    return out;
  };
  const auto coprime = certificates(sq.torus, sq.lcs, 3);
  CHECK(ids(coprime) == std::vector<std::string>{"a", "b"});
  for (const auto& c : coprime) {
    for (const auto& p : c.premises) {
      CHECK(p.holds);
      CHECK(p.machine_checked);
    }
  }
  CHECK(certificates(sq.torus, sq.lcs, 4).empty());

  const auto sphere = certificates(two_disk_sphere(), sphere_system(), 2);
  CHECK(ids(sphere) == std::vector<std::string>{"c"});
  CHECK(pi1_presentation(two_disk_sphere()).status == Pi1Status::kTrivial);

  // The certificates need X to realize the system.
  CHECK(certificates(sc::torus(), sq.lcs, 3).empty());
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holo/fdlie.hpp"
#include "holo/json_io.hpp"

using namespace holo;

namespace {

// [e1,e3] = e4, [e1,e4] = [e2,e3] = e5
StructureConstants cornulier() {
  StructureConstants sc(5);
  sc.set_bracket(0, 2, 3, 1);
  sc.set_bracket(0, 3, 4, 1);
  sc.set_bracket(1, 2, 4, 1);
  return sc;
}

// [e2,e3]=e6, [e2,e4]=e7, [e2,e5]=-e7, [e3,e4]=e7, [e1,ei]=e_{i+1} for 2<=i<=6
StructureConstants lambe_priddy7() {
  StructureConstants sc(7);
  sc.set_bracket(1, 2, 5, 1);
  sc.set_bracket(1, 3, 6, 1);
  sc.set_bracket(1, 4, 6, -1);
  sc.set_bracket(2, 3, 6, 1);
  for (int i = 2; i <= 6; ++i) sc.set_bracket(0, i - 1, i, 1);
  return sc;
}

StructureConstants heisenberg() {
  StructureConstants sc(3);
  sc.set_bracket(0, 1, 2, 1);
  return sc;
}

}  // namespace

TEST_CASE("validate structure constants") {
  CHECK(validate(StructureConstants(4)).ok);  // abelian
  CHECK(validate(cornulier()).ok);
  CHECK(validate(lambe_priddy7()).ok);
  CHECK(validate(heisenberg()).ok);

  StructureConstants bad(2);
  bad.c[0][1][0] = 1;  // no antisymmetric partner
  LieVerdict v = validate(bad);
  CHECK(!v.ok);
  CHECK(v.violation.find("antisymmetry") != std::string::npos);

  // antisymmetric but jacobi fails
  StructureConstants nj(3);
  nj.set_bracket(0, 1, 1, 1);
  nj.set_bracket(0, 2, 2, 1);
  nj.set_bracket(1, 2, 0, 1);
  LieVerdict v2 = validate(nj);
  CHECK(!v2.ok);
  CHECK(v2.violation.find("jacobi") != std::string::npos);
}

TEST_CASE("lcs and associated graded") {
  SECTION("heisenberg is already graded") {
    LcsResult r = lcs_and_gr(heisenberg());
    CHECK(r.lcs_dims == std::vector<int>{3, 1, 0});
    // gr has the same bracket in the adapted basis
    CHECK(r.gr.c[0][1][2] == 1);
    CHECK(validate(r.gr).ok);
  }
  SECTION("cornulier gr makes e2 central") {
    LcsResult r = lcs_and_gr(cornulier());
    CHECK(r.lcs_dims == std::vector<int>{5, 2, 1, 0});
    CHECK(validate(r.gr).ok);
    ObstructionProfile p = obstruction_profile(cornulier());
    CHECK(p.center_dim == 1);
    CHECK(p.gr_center_dim == 2);
    CHECK(p.obstruction_found);
  }
  SECTION("abelian is its own gr") {
    LcsResult r = lcs_and_gr(StructureConstants(3));
    CHECK(r.lcs_dims == std::vector<int>{3, 0});
    CHECK(r.gr.c == StructureConstants(3).c);
  }
  SECTION("non-nilpotent input is an error") {
    StructureConstants sl2ish(2);
    sl2ish.set_bracket(0, 1, 1, 1);  // [e1,e2] = e2: solvable, not nilpotent
    CHECK_THROWS_AS(lcs_and_gr(sl2ish), std::domain_error);
  }
  SECTION("gr is a fixed point of gr") {
    for (const StructureConstants& sc : {cornulier(), lambe_priddy7(), heisenberg()}) {
      LcsResult first = lcs_and_gr(sc);
      LcsResult second = lcs_and_gr(first.gr);
      CHECK(first.lcs_dims == second.lcs_dims);
      ObstructionProfile p = obstruction_profile(first.gr);
      CHECK(!p.obstruction_found);
    }
  }
}

TEST_CASE("obstruction profiles") {
  SECTION("lambe-priddy example is metabelian only after grading") {
    ObstructionProfile p = obstruction_profile(lambe_priddy7());
    CHECK(!p.metabelian);
    CHECK(p.gr_metabelian);
    CHECK(p.obstruction_found);
  }
  SECTION("heisenberg shows no obstruction") {
    ObstructionProfile p = obstruction_profile(heisenberg());
    CHECK(p.center_dim == p.gr_center_dim);
    CHECK(!p.obstruction_found);
  }
  SECTION("3-step free nilpotent malcev algebra shows no obstruction") {
    // [e1,e2] = e3 - e4/2 - e5, [e1,e3] = e4, [e2,e3] = e5
    StructureConstants sc(5);
    sc.set_bracket(0, 1, 2, 1);
    sc.set_bracket(0, 1, 3, Q(-1, 2));
    sc.set_bracket(0, 1, 4, -1);
    sc.set_bracket(0, 2, 3, 1);
    sc.set_bracket(1, 2, 4, 1);
    REQUIRE(validate(sc).ok);
    ObstructionProfile p = obstruction_profile(sc);
    CHECK(!p.obstruction_found);
  }
}

TEST_CASE("two-step malcev algebras") {
  SECTION("heisenberg from the commutator tensor") {
    std::vector<std::vector<std::vector<Z>>> c(
        1, std::vector<std::vector<Z>>(2, std::vector<Z>(2)));
    c[0][0][1] = 1;
    c[0][1][0] = -1;
    StructureConstants sc = two_step_malcev(2, 1, c);
    CHECK(sc.dim == 3);
    CHECK(sc.c[0][1][2] == 1);
    CHECK(validate(sc).ok);
  }
  SECTION("central products report no obstruction") {
    // [x1,x2][x3,x4] central: c^1_{12} = c^1_{34} = 1
    std::vector<std::vector<std::vector<Z>>> c(
        1, std::vector<std::vector<Z>>(4, std::vector<Z>(4)));
    c[0][0][1] = 1;
    c[0][1][0] = -1;
    c[0][2][3] = 1;
    c[0][3][2] = -1;
    StructureConstants sc = two_step_malcev(4, 1, c);
    CHECK(sc.dim == 5);
    REQUIRE(validate(sc).ok);
    ObstructionProfile p = obstruction_profile(sc);
    CHECK(!p.obstruction_found);
  }
  SECTION("m = 0 gives the abelian algebra") {
    StructureConstants sc = two_step_malcev(3, 0, {});
    CHECK(sc.dim == 3);
    CHECK(sc.c == StructureConstants(3).c);
  }
  SECTION("symmetry violations are rejected") {
    std::vector<std::vector<std::vector<Z>>> c(
        1, std::vector<std::vector<Z>>(2, std::vector<Z>(2)));
    c[0][0][1] = 1;
    c[0][1][0] = 1;
    CHECK_THROWS_AS(two_step_malcev(2, 1, c), std::invalid_argument);
  }
  SECTION("every two-step output has matching profiles") {
    // a handful of random antisymmetric integer tensors
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 2 + trial % 3, m = 1 + trial % 2;
      std::vector<std::vector<std::vector<Z>>> c(
          m, std::vector<std::vector<Z>>(n, std::vector<Z>(n)));
      for (int k = 0; k < m; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            int v = val(rng);
            c[k][i][j] = v;
            c[k][j][i] = -v;
          }
      StructureConstants sc = two_step_malcev(n, m, c);
      REQUIRE(validate(sc).ok);
      ObstructionProfile p = obstruction_profile(sc);
      CHECK(!p.obstruction_found);
    }
  }
}

TEST_CASE("structure constants json round trip") {
  json j = structure_constants_to_json(cornulier());
  StructureConstants back = structure_constants_from_json(j);
  CHECK(back.c == cornulier().c);

  StructureConstants rational = structure_constants_from_json(json::parse(
      R"({"dim": 3, "brackets": [[1, 2, [[3, "1/2"]]]]})"));
  CHECK(rational.c[0][1][2] == Q(1, 2));
  CHECK(rational.c[1][0][2] == Q(-1, 2));

  CHECK_THROWS_AS(structure_constants_from_json(json::parse(R"({"brackets": []})")),
                  std::invalid_argument);
}

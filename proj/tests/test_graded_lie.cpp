#include <catch2/catch_amalgamated.hpp>

#include "holo/graded_lie.hpp"
#include "holo/series.hpp"
#include "oracles.hpp"

using namespace holo;

namespace {

LieElement gen(int n, int i) { return LieElement::generator(n, i); }

GradedLiePresentation surface_holonomy(int g) {
  // lie(2g) / < sum [x_{2i-1}, x_{2i}] >
  FreeLie lie(2 * g);
  LieElement rel{2 * g, {}};
  for (int i = 0; i < g; ++i)
    rel += lie.bracket(gen(2 * g, 2 * i + 1), gen(2 * g, 2 * i + 2));
  return {2 * g, {rel}};
}

GradedLiePresentation borromean() {
  FreeLie lie(3);
  LieElement r1 = lie.bracket(gen(3, 1), lie.bracket(gen(3, 2), gen(3, 3)));
  LieElement r2 = lie.bracket(gen(3, 3), lie.bracket(gen(3, 2), gen(3, 1)));
  return {3, {r1, r2}};
}

void check_pbw_against_tensor_oracle(const GradedLieAlgebra& g, int through) {
  auto oracle_dims = oracle::tensor_algebra_quotient_dims(
      g.generators(), g.presentation().relations, through);
  RationalSeries pbw = pbw_series(std::vector<int>(g.dims().begin(), g.dims().end()), through);
  for (int k = 1; k <= through; ++k) {
    INFO("degree " << k);
    CHECK(pbw[k] == oracle_dims[k - 1]);
  }
}

}  // namespace

TEST_CASE("free quotient reproduces witt dimensions") {
  GradedLieAlgebra g({2, {}}, 6);
  CHECK(g.dims() == std::vector<int>{2, 1, 2, 3, 6, 9});
  GradedLieAlgebra f3({3, {}}, 4);
  FreeLie l3(3);
  for (int k = 1; k <= 4; ++k) CHECK(f3.dim(k) == l3.witt_dimension(k));
}

TEST_CASE("surface holonomy quotient dims") {
  GradedLieAlgebra g(surface_holonomy(2), 3);
  CHECK(g.dims() == std::vector<int>{4, 5, 16});
}

TEST_CASE("borromean quotient dims") {
  GradedLieAlgebra g(borromean(), 3);
  CHECK(g.dims() == std::vector<int>{3, 3, 6});
}

TEST_CASE("non-homogeneous relations are rejected") {
  FreeLie lie(2);
  LieElement bad = gen(2, 1);
  bad += lie.bracket(gen(2, 1), gen(2, 2));
  CHECK_THROWS_AS(GradedLieAlgebra({2, {bad}}, 3), std::invalid_argument);
}

TEST_CASE("structure constants satisfy antisymmetry and jacobi") {
  GradedLieAlgebra g(surface_holonomy(1), 4);  // lie(2)/<[x,y]> is abelian
  for (int k = 2; k <= 4; ++k) CHECK(g.dim(k) == 0);

  GradedLieAlgebra h(surface_holonomy(2), 4);
  // antisymmetry across the (a,b) and (b,a) tables
  for (int a = 1; a <= 3; ++a)
    for (int b = a; a + b <= 4; ++b) {
      const auto& tab = h.structure(a, b);
      const auto& tba = h.structure(b, a);
      for (std::size_t p = 0; p < tab.size(); ++p)
        for (std::size_t q = 0; q < tab[p].size(); ++q) {
          SparseVec neg = tba[q][p];
          for (auto& [c, v] : neg) v = -v;
          CHECK(tab[p][q] == neg);
        }
    }
  // jacobi on every basis triple through the max degree
  auto unit = [](int i) {
    SparseVec v;
    v.emplace_back(i, 1);
    return v;
  };
  int checked = 0;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 3; ++b)
      for (int c = 1; a + b + c <= 4; ++c)
        for (int p = 0; p < h.dim(a); ++p)
          for (int q = 0; q < h.dim(b); ++q)
            for (int r = 0; r < h.dim(c); ++r) {
              std::map<int, Q> acc;
              auto add = [&](const SparseVec& v) {
                for (const auto& [col, x] : v) {
                  acc[col] += x;
                  if (acc[col] == 0) acc.erase(col);
                }
              };
              add(h.bracket_coords(a, unit(p), b + c,
                                   h.bracket_coords(b, unit(q), c, unit(r))));
              add(h.bracket_coords(b, unit(q), c + a,
                                   h.bracket_coords(c, unit(r), a, unit(p))));
              add(h.bracket_coords(c, unit(r), a + b,
                                   h.bracket_coords(a, unit(p), b, unit(q))));
              if (acc.empty()) ++checked;
              CHECK(acc.empty());
            }
  CHECK(checked == 304);
}

TEST_CASE("pbw consistency against the tensor algebra oracle") {
  SECTION("free lie(2)") { check_pbw_against_tensor_oracle(GradedLieAlgebra({2, {}}, 5), 5); }
  SECTION("surface g=2") {
    check_pbw_against_tensor_oracle(GradedLieAlgebra(surface_holonomy(2), 5), 5);
  }
  SECTION("borromean") { check_pbw_against_tensor_oracle(GradedLieAlgebra(borromean(), 5), 5); }
}

TEST_CASE("derived series dimensions") {
  SECTION("free lie(2) chen ranks") {
    GradedLieAlgebra g({2, {}}, 6);
    DerivedDims d = g.derived_dims(2);
    CHECK(d.quotient == std::vector<int>{2, 1, 2, 3, 4, 5});
  }
  SECTION("abelian algebra has vanishing derived subalgebra") {
    GradedLieAlgebra g(surface_holonomy(1), 3);
    DerivedDims d = g.derived_dims(1);
    CHECK(d.subalgebra == std::vector<int>{0, 0, 0});
    CHECK(d.quotient == std::vector<int>{2, 0, 0});
  }
  SECTION("surface g=2 holonomy chen ranks") {
    GradedLieAlgebra g(surface_holonomy(2), 4);
    DerivedDims d = g.derived_dims(2);
    CHECK(d.quotient == std::vector<int>{4, 5, 16, 35});
  }
}

TEST_CASE("quotient by degree-1 relation") {
  // lie(2)/<x - y> is free of rank 1
  LieElement rel = gen(2, 1);
  LieElement y = gen(2, 2);
  y *= Q(-1);
  rel += y;
  GradedLieAlgebra g({2, {rel}}, 4);
  CHECK(g.dims() == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("mixed-degree relation sets") {
  FreeLie lie(3);
  LieElement quad = lie.bracket(gen(3, 1), gen(3, 2));
  LieElement cubic = lie.bracket(gen(3, 1), lie.bracket(gen(3, 1), gen(3, 3)));
  GradedLieAlgebra g({3, {quad, cubic}}, 5);
  CHECK(g.dim(1) == 3);
  CHECK(g.dim(2) == 2);
  check_pbw_against_tensor_oracle(g, 5);
}

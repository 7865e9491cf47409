#include <catch2/catch_amalgamated.hpp>

#include "holo/initial_forms.hpp"
#include "oracles.hpp"

using namespace holo;

namespace {
GroupPresentation whitehead() {
  return parse_presentation(
      "gens: x y; rels: x^-1 y^-1 x y x^-1 y x y^-1 x y x^-1 y^-1 x y^-1 x^-1 y");
}
}  // namespace

TEST_CASE("initial forms presentations") {
  SECTION("whitehead relator gives the degree-4 relation") {
    GradedLiePresentation p = initial_forms_presentation(whitehead(), 6);
    REQUIRE(p.relations.size() == 1);
    FreeLie lie(2);
    LieElement x = LieElement::generator(2, 1), y = LieElement::generator(2, 2);
    CHECK(p.relations[0] == lie.bracket(x, lie.bracket(y, lie.bracket(x, y))));
    CHECK(*p.relations[0].homogeneous_degree() == 4);
  }
  SECTION("lowest part of a mixed-weight product relator") {
    GroupPresentation p =
        parse_presentation("gens: x1 x2 x3 x4 x5; rels: [x1,x2][x3,[x4,x5]]");
    GradedLiePresentation forms = initial_forms_presentation(p, 6);
    REQUIRE(forms.relations.size() == 1);
    LieElement expect{5, {}};
    expect.add(mono_of({1, 2}), 1);
    CHECK(forms.relations[0] == expect);
  }
  SECTION("surface relator gives the quadratic sum") {
    GroupPresentation p = parse_presentation("gens: a b c d; rels: [a,b][c,d]");
    GradedLiePresentation forms = initial_forms_presentation(p, 6);
    LieElement expect{4, {}};
    expect.add(mono_of({1, 2}), 1);
    expect.add(mono_of({3, 4}), 1);
    CHECK(forms.relations[0] == expect);
  }
  SECTION("cap exceeded names the relator") {
    GroupPresentation p = parse_presentation("gens: x y; rels: [x,y]; [x,[x,[x,y]]]");
    try {
      initial_forms_presentation(p, 2);
      FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
      CHECK(e.relator == 2);
    }
  }
}

TEST_CASE("mildness checks") {
  SECTION("the quadratic three-relator example passes Anick") {
    GroupPresentation p = parse_presentation(
        "gens: x1 x2 x3 x4; rels: [x2,x3]; [x1,x4]; [x1,x3][x2,x4]");
    MildnessReport r = mildness_check(p, 5);
    CHECK(r.weights == std::vector<int>{2, 2, 2});
    CHECK(r.leading_words ==
          std::vector<Mono>{mono_of({2, 3}), mono_of({1, 4}), mono_of({1, 3})});
    CHECK(r.combinatorial_pass);
    CHECK(r.hilbert_pass);
  }
  SECTION("one-relator groups pass the Hilbert criterion") {
    MildnessReport r = mildness_check(whitehead(), 5);
    CHECK(r.hilbert_pass);
    MildnessReport r2 =
        mildness_check(parse_presentation("gens: x y; rels: [x,[x,y]]"), 6);
    CHECK(r2.hilbert_pass);
  }
  SECTION("duplicate relators fail the combinatorial check") {
    GroupPresentation p = parse_presentation("gens: x1 x2; rels: [x1,x2]; [x1,x2]");
    MildnessReport r = mildness_check(p, 4);
    CHECK(!r.combinatorial_pass);
  }
  SECTION("borromean relators pass with a suitable ordering") {
    GroupPresentation p =
        parse_presentation("gens: x y z; rels: [x,[y,z]]; [z,[y,x]]");
    // the default ordering x > y > z gives equal leading words; the
    // combinatorial verdict is ordering-sensitive, the Hilbert one is not
    MildnessReport bad = mildness_check(p, 5);
    CHECK(!bad.combinatorial_pass);
    CHECK(bad.hilbert_pass);
    MildnessReport r = mildness_check(p, 5, {2, 1, 3});
    CHECK(r.combinatorial_pass);
    CHECK(r.hilbert_pass);
    CHECK(r.quotient_dims[0] == 3);
    CHECK(r.quotient_dims[1] == 3);
    CHECK(r.quotient_dims[2] == 6);
  }
  SECTION("combinatorial pass implies hilbert pass on assorted inputs") {
    for (const char* text : {
             "gens: x y; rels: [x,y]",
             "gens: x y z; rels: [x,[y,z]]; [z,[y,x]]",
             "gens: x1 x2 x3 x4; rels: [x2,x3]; [x1,x4]; [x1,x3][x2,x4]",
             "gens: x y; rels: [x,[x,y]]",
             "gens: a b c; rels: [a,b]",
         }) {
      MildnessReport r = mildness_check(parse_presentation(text), 5);
      if (r.combinatorial_pass) {
        INFO(text);
        CHECK(r.hilbert_pass);
      }
    }
  }
  SECTION("ordering sensitivity is caller-controlled") {
    GroupPresentation p = parse_presentation(
        "gens: x1 x2 x3 x4; rels: [x2,x3]; [x1,x4]; [x1,x3][x2,x4]");
    MildnessReport r = mildness_check(p, 4, {4, 3, 2, 1});
    // with reversed precedence the leading words change
    CHECK(r.leading_words !=
          std::vector<Mono>{mono_of({2, 3}), mono_of({1, 4}), mono_of({1, 3})});
  }
}

TEST_CASE("labute closed-form ranks") {
  SECTION("abelian Z^2") { CHECK(labute_phi(2, 2, 2) == 0); }
  SECTION("surface g=2 degree 3") { CHECK(labute_phi(4, 2, 3) == 16); }
  SECTION("weight-1 relator reduces the rank") {
    FreeLie f2(2);
    for (int k = 1; k <= 6; ++k) CHECK(labute_phi(3, 1, k) == f2.witt_dimension(k));
  }
  SECTION("agreement with the graded quotient engine, surface g=2") {
    GroupPresentation p = parse_presentation("gens: a b c d; rels: [a,b][c,d]");
    GradedLieAlgebra l(initial_forms_presentation(p, 6), 6);
    for (int k = 1; k <= 6; ++k) {
      INFO("degree " << k);
      CHECK(Z(l.dim(k)) == labute_phi(4, 2, k));
    }
  }
  SECTION("one-relator dims equal labute_phi through the cap") {
    struct Case {
      const char* text;
      int n, e;
    };
    for (const Case& c : {Case{"gens: x y; rels: [x,[x,y]]", 2, 3},
                          Case{"gens: x y z; rels: [x,y]", 3, 2},
                          Case{"gens: x y; rels: x y^-1", 2, 1}}) {
      GroupPresentation p = parse_presentation(c.text);
      GradedLieAlgebra l(initial_forms_presentation(p, 5), 5);
      for (int k = 1; k <= 5; ++k) {
        INFO(c.text << " degree " << k);
        CHECK(Z(l.dim(k)) == labute_phi(c.n, c.e, k));
      }
    }
  }
  SECTION("whitehead dims through degree 5 match labute_phi(2,4,k)") {
    GradedLieAlgebra l(initial_forms_presentation(whitehead(), 5), 5);
    for (int k = 1; k <= 5; ++k) {
      INFO("degree " << k);
      CHECK(Z(l.dim(k)) == labute_phi(2, 4, k));
    }
  }
}

TEST_CASE("one-relator reports") {
  SECTION("weight 3 is not graded-formal") {
    OneRelatorReport r =
        onerelator_report(parse_presentation("gens: x y; rels: [x,[x,y]]"), 5);
    CHECK(r.weight == 3);
    CHECK(!r.graded_formal);
    CHECK(r.holonomy.generators == 2);
    CHECK(r.holonomy.relations.empty());
    // Hilb U(h) = 1/(1-2t)
    Q power = 1;
    for (int k = 0; k <= 5; ++k) {
      CHECK(r.uh_series[k] == power);
      power *= 2;
    }
    REQUIRE(r.degree_weight_discrepancy.has_value());
    CHECK(r.degree_weight_discrepancy->first == 2);   // witt(2,3)
    CHECK(r.degree_weight_discrepancy->second == 1);  // labute ranks
  }
  SECTION("surface g=2 is graded-formal with the koszul series") {
    OneRelatorReport r =
        onerelator_report(parse_presentation("gens: a b c d; rels: [a,b][c,d]"), 4);
    CHECK(r.weight == 2);
    CHECK(r.graded_formal);
    // 1/(1-4t+t^2): 1, 4, 15, 56, 209
    CHECK(r.uh_series[2] == 15);
    CHECK(r.uh_series[4] == 209);
    CHECK(r.lcs_dims == std::vector<int>{4, 5, 16, 45});
  }
  SECTION("weight 1 gives a free group of lower rank") {
    OneRelatorReport r =
        onerelator_report(parse_presentation("gens: x y; rels: x y^-1"), 4);
    CHECK(r.weight == 1);
    CHECK(r.graded_formal);
    CHECK(r.holonomy.generators == 1);
    for (int k = 0; k <= 4; ++k) CHECK(r.uh_series[k] == 1);  // 1/(1-t)
  }
  SECTION("whitehead is not graded-formal") {
    OneRelatorReport r = onerelator_report(whitehead(), 5);
    CHECK(r.weight == 4);
    CHECK(!r.graded_formal);
  }
  SECTION("wrong relator count") {
    CHECK_THROWS_AS(onerelator_report(parse_presentation("gens: x y; rels:"), 4),
                    std::invalid_argument);
  }
}

TEST_CASE("graded-formal weight-2 case: holonomy ranks equal L(G) dims") {
  GroupPresentation p = parse_presentation("gens: a b c d; rels: [a,b][c,d]");
  OneRelatorReport r = onerelator_report(p, 5);
  GradedLieAlgebra h(r.holonomy, 5);
  CHECK(h.dims() == r.lcs_dims);
}

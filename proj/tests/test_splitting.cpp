#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "logsplit/errors.hpp"
#include "logsplit/parse.hpp"
#include "logsplit/splitting.hpp"

using namespace logsplit;

TEST_CASE("line defect") {
  CHECK(line_defect(5, SplitType{2, 2}) == 12);
  CHECK(line_defect(5, SplitType{1, 3}) == 13);
  CHECK(line_defect(3, SplitType{1, 1}) == 3);
  CHECK(line_defect(9, SplitType{4, 4}) == 48);
}

TEST_CASE("free curve: every line splits as the exponents") {
  CurveAnalyzer c(parse_poly("x*y*z"));
  CHECK(h0_line(c, LinForm{rat(1), rat(2), rat(3)}, 0) == 0);
  CHECK(h0_line(c, LinForm{rat(1), rat(2), rat(3)}, 1) == 2);
  std::vector<LinForm> lines = {
      {rat(1), rat(0), rat(0)},  // component
      {rat(0), rat(1), rat(0)},  // component
      {rat(1), rat(1), rat(1)},  // through no singular point
      {rat(1), rat(1), rat(0)},  // through the double point (0:0:1)
  };
  for (const auto& l : lines) CHECK(splitting_type(c, l) == SplitType{1, 1});
}

TEST_CASE("nearly free quintic: generic and special lines") {
  CurveAnalyzer c(parse_poly("x*y*z*(y - z)*(x + 2*y + 3*z)"));
  // a component through the triple point still realizes the generic type
  CHECK(splitting_type(c, LinForm{rat(0), rat(0), rat(1)}) == SplitType{2, 2});
  // x is a jumping line: the type rises to (1,3) and the defect grows by one
  CHECK(splitting_type(c, LinForm{rat(1), rat(0), rat(0)}) == SplitType{1, 3});
  CHECK(line_defect(5, SplitType{1, 3}) == Int(c.tau()) + c.nu() + 1);
  // a non-component line away from the jumping locus
  CHECK(splitting_type(c, LinForm{rat(7), rat(5), rat(-3)}) == SplitType{2, 2});
}

TEST_CASE("generic splitting certificates") {
  SUBCASE("free curve: generic type equals the exponents") {
    CurveAnalyzer c(parse_poly("x*y*z"));
    GenericSplit g = generic_splitting(c);
    CHECK(g.type == SplitType{1, 1});
    CHECK(g.valid_samples > 0);
    // the witness is not a component and achieves the type
    CHECK(splitting_type(c, g.witness) == g.type);
  }
  SUBCASE("nearly free: generic type drops the second exponent by one") {
    CurveAnalyzer c(parse_poly("x*y*z*(y - z)*(x + 2*y + 3*z)"));
    CHECK(generic_splitting(c).type == SplitType{2, 2});
  }
  SUBCASE("smooth cubic") {
    CurveAnalyzer c(parse_poly("x^3 + y^3 + z^3"));
    CHECK(generic_splitting(c).type == SplitType{1, 1});
  }
  SUBCASE("smooth conic: the bundle has a trivial summand") {
    CurveAnalyzer c(parse_poly("x^2 + y*z"));
    CHECK(generic_splitting(c).type == SplitType{0, 1});
  }
}

TEST_CASE("generic splitting is deterministic in the seed") {
  CurveAnalyzer c1(parse_poly("x*y*z*(x + 2*y + 3*z)"));
  CurveAnalyzer c2(parse_poly("x*y*z*(x + 2*y + 3*z)"));
  SampleConfig cfg;
  cfg.seed = 42;
  GenericSplit a = generic_splitting(c1, cfg);
  GenericSplit b = generic_splitting(c2, cfg);
  CHECK(a.type == b.type);
  CHECK(a.witness.same_line(b.witness));
  CHECK(a.draws == b.draws);
}

TEST_CASE("splitting type image over members plus samples") {
  CurveAnalyzer c(parse_poly("x*y*z*(y - z)*(x + 2*y + 3*z)"));
  std::vector<LinForm> members = {{rat(1), rat(0), rat(0)},
                                  {rat(0), rat(1), rat(0)},
                                  {rat(0), rat(0), rat(1)},
                                  {rat(0), rat(1), rat(-1)},
                                  {rat(1), rat(2), rat(3)}};
  auto img = a_image(c, members);
  CHECK(img == std::vector<SplitType>{{1, 3}, {2, 2}});
}

TEST_CASE("pencils have no two-term splitting computation") {
  CurveAnalyzer c(parse_poly("x*y*(x - y)*(x + y)"));
  CHECK_THROWS_AS(splitting_type(c, LinForm{rat(1), rat(1), rat(1)}), std::logic_error);
}

TEST_CASE("degenerate inputs") {
  CurveAnalyzer c(parse_poly("x*y*z"));
  CHECK_THROWS_AS(h0_line(c, LinForm{rat(0), rat(0), rat(0)}, 1), std::invalid_argument);

  SampleConfig starved;
  starved.coeff_box = 0;  // every draw is the zero form, so no valid sample exists
  CurveAnalyzer c2(parse_poly("x*y*z"));
  CHECK_THROWS_AS(generic_splitting(c2, starved), GenericityError);
}

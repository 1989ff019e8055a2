#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "logsplit/errors.hpp"
#include "logsplit/jacobian.hpp"
#include "logsplit/parse.hpp"

using namespace logsplit;

namespace {

// Saturation degree-k piece computed from scratch: forms g with g * S_N
// inside J_{k+N}, where k + N reaches the degree from which the Jacobian
// ideal agrees with its saturation. Independent of the descending tower
// used by CurveAnalyzer::saturated_piece.
int direct_saturation_dim(CurveAnalyzer& c, int k) {
  int d = c.degree();
  int n_shift = std::max(1, 3 * d - 5 - k);
  const Subspace& target = c.jacobian_piece(k + n_shift);
  auto mons = monomial_basis(n_shift);
  int cols = dim_forms(k);
  QMatrix stacked;
  for (const Mono& m : mons) {
    QMatrix mm = mult_map(hp_mono(m, rat(1)), k);
    QMatrix res(mm.rows, cols);
    std::vector<Rat> col(mm.rows);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < mm.rows; ++i) col[i] = mm.at(i, j);
      auto r = target.residual(col);
      for (int i = 0; i < mm.rows; ++i) res.at(i, j) = r[i];
    }
    stacked = stacked.rows == 0 && stacked.cols == 0 ? res : vcat(stacked, res);
  }
  return kernel_basis(stacked).dim();
}

}  // namespace

TEST_CASE("three concurrent-free lines: free with exponents (1,1)") {
  CurveAnalyzer c(parse_poly("x*y*z"));
  CHECK(c.degree() == 3);
  CHECK(c.mdr() == 1);
  CHECK(c.syzygy_dim(0) == 0);
  CHECK(c.syzygy_dim(1) == 2);
  CHECK(c.tau() == 3);
  CHECK(c.nu() == 0);
  CHECK(c.classify() == CurveClass::Free);
  CHECK(c.exponents() == ExponentPair{1, 1});
  CHECK(c.chern() == ChernPair{-2, 1});
  CHECK(c.min_gen_degrees() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("five lines, one triple point: nearly free (2,3)") {
  CurveAnalyzer c(parse_poly("x*y*z*(y - z)*(x + 2*y + 3*z)"));
  CHECK(c.tau() == 11);
  CHECK(c.mdr() == 2);
  CHECK(c.nu() == 1);
  CHECK(c.classify() == CurveClass::NearlyFree);
  CHECK(c.exponents() == ExponentPair{2, 3});
  CHECK(c.chern() == ChernPair{-4, 5});
  // one generator in degree 2, then two more in degree 3
  CHECK(c.min_gen_degrees() ==
        std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
  // saturation defect sits symmetrically around 3(d-2)/2
  CHECK(c.defect_dim(4) == 1);
  CHECK(c.defect_dim(5) == 1);
  CHECK(c.defect_dim(3) == c.defect_dim(6));
}

TEST_CASE("four generic lines: nearly free (2,2)") {
  CurveAnalyzer c(parse_poly("x*y*z*(x + 2*y + 3*z)"));
  CHECK(c.tau() == 6);
  CHECK(c.mdr() == 2);
  CHECK(c.nu() == 1);
  CHECK(c.classify() == CurveClass::NearlyFree);
  CHECK(c.exponents() == ExponentPair{2, 2});
  CHECK(c.min_gen_degrees() == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("four concurrent lines: pencil") {
  CurveAnalyzer c(parse_poly("x*y*(x - y)*(x + y)"));
  CHECK(c.mdr() == 0);
  CHECK(c.tau() == 9);
  CHECK(c.classify() == CurveClass::Pencil);
  CHECK(c.exponents() == ExponentPair{0, 3});
  CHECK(c.chern() == ChernPair{-3, 0});
  CHECK(c.min_gen_degrees() ==
        std::vector<std::pair<int, int>>{{0, 1}, {3, 1}});
}

TEST_CASE("smooth cubic: neither free nor nearly free") {
  CurveAnalyzer c(parse_poly("x^3 + y^3 + z^3"));
  CHECK(c.tau() == 0);
  CHECK(c.mdr() == 2);
  CHECK(c.nu() == 3);
  CHECK(c.classify() == CurveClass::Other);
  CHECK_THROWS_AS(c.exponents(), std::logic_error);
  CHECK(c.chern() == ChernPair{-2, 4});
}

TEST_CASE("smooth conic: nearly free (1,1)") {
  CurveAnalyzer c(parse_poly("x^2 + y*z"));
  CHECK(c.tau() == 0);
  CHECK(c.nu() == 1);
  CHECK(c.classify() == CurveClass::NearlyFree);
  CHECK(c.exponents() == ExponentPair{1, 1});
  CHECK(c.min_gen_degrees() == std::vector<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("Jacobian Hilbert function stabilizes at the Tjurina number") {
  CurveAnalyzer c(parse_poly("x*y*z"));
  int d = c.degree();
  for (int k : {3 * d - 5, 3 * d - 4, 3 * d - 3}) CHECK(c.jacobian_hilbert(k) == 3);
  // complementary ranks
  CHECK(c.jacobian_rank(2) + c.jacobian_hilbert(2) == dim_forms(2));
}

TEST_CASE("syzygy spaces live inside the gradient kernel") {
  CurveAnalyzer c(parse_poly("x*y*z*(x + 2*y + 3*z)"));
  const auto& g = c.gradient();
  for (int k = 1; k <= 3; ++k) {
    const Subspace& syz = c.syzygies(k);
    REQUIRE(syz.ambient() == 3 * dim_forms(k));
    for (int i = 0; i < syz.dim(); ++i) {
      auto row = syz.basis().row(i);
      HomPoly acc = hp_zero(k + c.degree() - 1);
      for (int blk = 0; blk < 3; ++blk) {
        std::vector<Rat> part(row.begin() + blk * dim_forms(k),
                              row.begin() + (blk + 1) * dim_forms(k));
        acc = hp_add(acc, hp_mul(from_coeff_vector(k, part), g[blk]));
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("saturation tower agrees with the direct shifted computation") {
  CurveAnalyzer c(parse_poly("x*y*z*(y - z)*(x + 2*y + 3*z)"));
  for (int k = 2; k <= 5; ++k) {
    CHECK(c.saturated_piece(k).dim() == direct_saturation_dim(c, k));
    CHECK(c.saturated_piece(k).contains(c.jacobian_piece(k)));
  }
}

TEST_CASE("saturation tower agrees on a free curve (defect identically zero)") {
  CurveAnalyzer c(parse_poly("x*y*z"));
  for (int k = 0; k <= 3; ++k) {
    CHECK(c.saturated_piece(k).dim() == direct_saturation_dim(c, k));
    CHECK(c.defect_dim(k) == 0);
  }
}

TEST_CASE("admissible Tjurina range") {
  TauBounds b95 = tau_admissible_range(9, 5);
  CHECK(b95.tau_min == 24);
  CHECK(b95.tau_max == 46);
  TauBounds b96 = tau_admissible_range(9, 6);
  CHECK(b96.tau_min == 16);
  CHECK(b96.tau_max == 42);
  // pencils: the range collapses to (d-1)^2
  TauBounds b70 = tau_admissible_range(7, 0);
  CHECK(b70.tau_min == 36);
  CHECK(b70.tau_max == 36);

  // every analyzed curve lands inside its own range
  for (const char* src : {"x*y*z", "x*y*z*(y - z)*(x + 2*y + 3*z)", "x^3 + y^3 + z^3"}) {
    CurveAnalyzer c(parse_poly(src));
    TauBounds b = tau_admissible_range(c.degree(), c.mdr());
    CHECK(c.tau() >= b.tau_min);
    CHECK(c.tau() <= b.tau_max);
  }
}

TEST_CASE("non-reduced input is detected when the Hilbert function will not stabilize") {
  CurveAnalyzer c(parse_poly("x^2*y"));
  CHECK_THROWS_AS(c.tau(), InvariantError);
}

TEST_CASE("constant input is rejected up front") {
  CHECK_THROWS_AS(CurveAnalyzer(hp_zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(CurveAnalyzer(hp_mono({0, 0, 0}, rat(5))), std::invalid_argument);
}

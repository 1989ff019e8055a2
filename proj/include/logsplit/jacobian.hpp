#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logsplit/poly.hpp"

namespace logsplit {

enum class CurveClass { Pencil, Free, NearlyFree, Other };

std::string class_name(CurveClass c);

struct ChernPair {
  Int c1, c2;
  bool operator==(const ChernPair&) const = default;
};

struct ExponentPair {
  int d1 = 0, d2 = 0;  // d1 <= d2
  bool operator==(const ExponentPair&) const = default;
};

// Admissible range of the total Tjurina number for a reduced curve of degree
// d whose syzygy module starts in degree r.
struct TauBounds {
  Int tau_min, tau_max;
};
TauBounds tau_admissible_range(int d, int r);

// Graded invariants of one reduced curve V(f): syzygies of the gradient,
// Jacobian ideal, its saturation, and the derived classification. Everything
// is computed lazily and cached; all arithmetic is exact.
class CurveAnalyzer {
 public:
  explicit CurveAnalyzer(HomPoly f);

  int degree() const { return d_; }
  const HomPoly& poly() const { return f_; }
  const std::array<HomPoly, 3>& gradient() const { return grad_; }

  // Degree-k relations among the three partials, as a subspace of S_k^3
  // (coordinates: three monomial-basis blocks).
  const Subspace& syzygies(int k);
  int syzygy_dim(int k);
  int mdr();  // least k with a nonzero relation

  int jacobian_rank(int k);           // dim J_k
  int jacobian_hilbert(int k);        // dim (S/J)_k
  const Subspace& jacobian_piece(int k);

  // dim (S/J)_k agrees at k = 3d-5, 3d-4, 3d-3 for reduced curves; that
  // stable value is the total Tjurina number.
  Int tau();

  // Degree-k piece of the saturation of J with respect to (x, y, z),
  // computed by the descending tower from the stable range; the entry step
  // is verified against the ideal-quotient characterization.
  const Subspace& saturated_piece(int k);
  int defect_dim(int k);  // dim (\hat J / J)_k
  int nu();               // saturation defect: defect at k = floor(3(d-2)/2)

  ChernPair chern();  // (c1, c2) of the logarithmic bundle

  CurveClass classify();
  ExponentPair exponents();  // pencil / free / nearly free only

  // Degrees and counts of a minimal generating set of the syzygy module,
  // scanned up to kmax (default: the curve degree).
  std::vector<std::pair<int, int>> min_gen_degrees(int kmax = -1);

 private:
  QMatrix gradient_matrix(int k) const;
  void check_saturation_root();

  HomPoly f_;
  int d_;
  std::array<HomPoly, 3> grad_;
  std::map<int, Subspace> syz_;
  std::map<int, int> syz_dim_;
  std::map<int, Subspace> jac_;
  std::map<int, Subspace> sat_;
  std::optional<int> mdr_;
  std::optional<Int> tau_;
  bool root_checked_ = false;
};

}  // namespace logsplit

#pragma once
#include <utility>
#include <vector>

#include "logsplit/jacobian.hpp"

namespace logsplit {

// Splitting type of the logarithmic bundle along a line: d1 <= d2,
// d1 + d2 = deg - 1.
struct SplitType {
  int d1 = 0, d2 = 0;
  bool operator==(const SplitType&) const = default;
  auto operator<=>(const SplitType&) const = default;
};

// (d-1)^2 - d1*d2; at least tau + nu for every line, with equality exactly
// on generic lines.
Int line_defect(int d, SplitType t);

// h^0 of the restricted bundle twisted by k, via syzygy dimensions and the
// kernel of multiplication by the line's form on the saturation defect
// module. The line must not be a component of the curve.
int h0_line(CurveAnalyzer& c, const LinForm& l, int k);

// Splitting type along one explicit line (component lines allowed), with the
// full h^0 profile checked against the shape forced by a rank-two splitting.
// Throws std::logic_error when the curve is a pencil.
SplitType splitting_type(CurveAnalyzer& c, const LinForm& l);

struct SampleConfig {
  unsigned long seed = 1;
  long coeff_box = 97;  // coefficients drawn uniformly from [-coeff_box, coeff_box]
  int max_valid = 8;    // sampled non-component lines before giving up
  int max_draws = 64;   // raw draws before giving up
};

// Distinct splitting types over the given lines plus sampled random
// non-component lines, sorted.
std::vector<SplitType> a_image(CurveAnalyzer& c, const std::vector<LinForm>& lines,
                               const SampleConfig& cfg = {});

struct GenericSplit {
  SplitType type;    // predicted from tau and nu, certified by the witness
  LinForm witness;   // sampled line achieving the predicted type
  int valid_samples = 0;
  int draws = 0;
  std::vector<std::pair<SplitType, LinForm>> samples;  // all sampled non-component lines
};

// Predicts the generic splitting type from d1 + d2 = d - 1 and
// d1*d2 = (d-1)^2 - tau - nu, then certifies it on a random line. Throws
// GenericityError when sampling exhausts its budget and InvariantError when
// a sample contradicts semicontinuity or no integral solution exists.
GenericSplit generic_splitting(CurveAnalyzer& c, const SampleConfig& cfg = {});

}  // namespace logsplit

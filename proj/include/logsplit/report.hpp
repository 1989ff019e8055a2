#pragma once
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logsplit/arrangement.hpp"
#include "logsplit/splitting.hpp"

namespace logsplit {

// One verified statement: theorems evaluated on computed invariants and
// cross-checks between independent computation paths. A failure is a bug
// signal, not a property of the input.
struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct LineReport {
  LinForm line;
  SplitType splitting;
  Int defect{0};  // (d-1)^2 - d1*d2 along this line
  bool member = false;
};

struct RestrictionReport {
  int h = -1;
  std::pair<int, int> exponents{0, 0};
  Int b2_diff{0};
  bool nearfree = false;  // b2_diff == 1, forcing nearly free
};

struct ArrangementReport {
  int n = 0;
  CharPoly chi{};
  std::vector<Flat> flats;
  Int tau_lattice{0};
  std::vector<RestrictionReport> restrictions;
  SmallRestrictionDecision decision;
  std::vector<int> unbalanced_lines;
  ArrVerdict unbalanced_verdict = ArrVerdict::Indeterminate;
  // For nearly free arrangements with exponents (d1, d2): whether some
  // restriction realizes the second pair (d1, d2-1). Informational only.
  bool has_second_type = false;
  std::optional<int> second_type_witness;
  std::vector<AdditionDeletion> additions;  // filled when requested
};

struct FullReport {
  int degree = 0;
  Int tau{0};
  int mdr = 0;
  int nu = 0;
  ChernPair chern{};
  CurveClass cls = CurveClass::Other;
  std::optional<ExponentPair> exponents;  // pencil / free / nearly free
  std::optional<SplitType> generic;       // absent for pencils
  std::optional<LinForm> generic_witness;
  TauBounds tau_range{};
  std::vector<std::pair<int, int>> gen_degrees;  // (degree, new generators)
  std::vector<LineReport> lines;
  std::optional<ArrangementReport> arrangement;
  std::vector<Check> checks;

  bool all_passed() const;
};

struct ReportOptions {
  unsigned long seed = 1;
  long coeff_box = 97;
  int kmax = -1;          // generator scan bound shown in the report; -1 = degree
  bool with_addition = false;  // evaluate addition-deletion at every line
};

FullReport analyze_curve(const HomPoly& f, const ReportOptions& opt = {});
FullReport analyze_arrangement(const Arrangement& a, const ReportOptions& opt = {});

nlohmann::ordered_json report_json(const FullReport& r);
std::string report_text(const FullReport& r);

nlohmann::ordered_json addition_json(const AdditionDeletion& ad);
std::string addition_text(const AdditionDeletion& ad);

}  // namespace logsplit

#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "logsplit/jacobian.hpp"

namespace logsplit {

// A finite set of distinct lines in P^2.
struct Arrangement {
  std::vector<LinForm> lines;

  int n() const { return static_cast<int>(lines.size()); }
  HomPoly defining_poly() const;  // product of the forms, degree n
};

// Intersection point together with the lines through it.
struct Flat {
  std::array<Int, 3> point;  // canonical projective coordinates
  std::vector<int> lines;    // ascending indices

  int multiplicity() const { return static_cast<int>(lines.size()); }
};

// All pairwise intersection points, sorted by coordinates.
std::vector<Flat> intersection_lattice(const Arrangement& a);

// Reduced characteristic polynomial t^2 - b1*t + b2.
struct CharPoly {
  Int b1, b2;
  bool operator==(const CharPoly&) const = default;
};
CharPoly char_poly(const std::vector<Flat>& flats, int n);

// Sum of (multiplicity - 1)^2; equals the Tjurina number of the defining
// polynomial, giving a purely combinatorial cross-check of the algebraic path.
Int tau_from_lattice(const std::vector<Flat>& flats);

// Multiarrangement on a projective line: points with multiplicities.
struct MultiPoint {
  std::array<Int, 2> form;  // canonical binary form vanishing at the point
  int mult = 0;
};
struct Multi2D {
  std::vector<MultiPoint> points;

  int total() const;
};

// Restriction to the h-th line: each intersection point on it, weighted by
// (number of lines through it) - 1. Total weight is n - 1.
Multi2D multi_restriction(const Arrangement& a, int h);

// Dimension of the degree-k derivations of the multiarrangement: pairs of
// degree-k binary forms (a, b) with a*dp + b*dq divisible by each point's
// form to its multiplicity.
int multi_der_dim(const Multi2D& m, int k);

// Exponents (e1 <= e2) with e1 + e2 = total multiplicity; the dimension
// profile is checked against the shape forced by freeness in two variables.
std::pair<int, int> multi_exponents(const Multi2D& m);

// b2 minus the product of restriction exponents, per line. Nonnegative, and
// zero exactly when the arrangement is free; zero-ness must agree across
// lines.
struct RestrictionFreeness {
  std::vector<Int> diffs;                          // by line index
  std::vector<std::pair<int, int>> exponents;      // restriction exponents by line
  bool free = false;
};
RestrictionFreeness restriction_freeness_test(const Arrangement& a);

// Sufficient condition for nearly free: some restriction has diff exactly 1.
struct NearFreeRestriction {
  bool applies = false;
  int h = -1;
};
NearFreeRestriction nearfree_test(const RestrictionFreeness& rf);

enum class ArrVerdict { Free, NearlyFree, Neither, Indeterminate };
std::string verdict_name(ArrVerdict v);

// Decision procedure from a line with at most four restriction points, each
// intersection point of multiplicity below n/2.
struct SmallRestrictionDecision {
  bool applicable = false;
  ArrVerdict verdict = ArrVerdict::Indeterminate;
  int h = -1;                     // deciding line
  std::pair<int, int> exponents{0, 0};
  Int b2_diff{0};
  bool chi_perfect_square = false;
};
SmallRestrictionDecision small_restriction_decide(const Arrangement& a);

// Decision from an unbalanced restriction: one point of the restriction to h
// carries at least half the total multiplicity.
struct UnbalancedDecision {
  bool applicable = false;
  ArrVerdict verdict = ArrVerdict::Indeterminate;
  std::pair<int, int> exponents{0, 0};
  Int b2_diff{0};
};
UnbalancedDecision unbalanced_decide(const Arrangement& a, int h);

// Addition-deletion implications between A and B = A minus its h-th line,
// evaluated against the exact classifications of both arrangements.
struct Implication {
  std::string name;
  bool premises_hold = false;
  bool conclusion_holds = false;
  std::string detail;

  bool respected() const { return !premises_hold || conclusion_holds; }
};
struct AdditionDeletion {
  int h = -1;
  int restriction_count = 0;  // intersection points on the h-th line
  CurveClass class_a = CurveClass::Other;
  CurveClass class_b = CurveClass::Other;
  std::vector<Implication> implications;
};
AdditionDeletion addition_deletion(const Arrangement& a, int h);

}  // namespace logsplit

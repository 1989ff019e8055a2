#include "logsplit/arrangement.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "logsplit/errors.hpp"

namespace logsplit {

namespace {

std::array<Rat, 3> cross(const LinForm& a, const LinForm& b) {
  return {a.b * b.c - a.c * b.b, a.c * b.a - a.a * b.c, a.a * b.b - a.b * b.a};
}

// Integer roots (r1 <= r2) of t^2 - sum*t + prod, if any.
std::optional<std::pair<Int, Int>> int_roots(const Int& sum, const Int& prod) {
  Int disc = sum * sum - 4 * prod;
  if (disc < 0) return std::nullopt;
  Int s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  if (s * s != disc || (sum - s) % 2 != 0) return std::nullopt;
  return std::make_pair((sum - s) / 2, (sum + s) / 2);
}

}  // namespace

HomPoly Arrangement::defining_poly() const {
  HomPoly f = hp_mono({0, 0, 0}, rat(1));
  for (const LinForm& l : lines) f = hp_mul(f, l.to_poly());
  return f;
}

std::vector<Flat> intersection_lattice(const Arrangement& a) {
  std::map<std::array<Int, 3>, std::set<int>> by_point;
  for (int i = 0; i < a.n(); ++i)
    for (int j = i + 1; j < a.n(); ++j) {
      auto p = cross(a.lines[i], a.lines[j]);
      if (p[0] == 0 && p[1] == 0 && p[2] == 0)
        throw std::invalid_argument("intersection_lattice: coincident lines " +
                                    std::to_string(i) + " and " + std::to_string(j));
      auto& through = by_point[canonical_triple(p)];
      through.insert(i);
      through.insert(j);
    }
  std::vector<Flat> flats;
  flats.reserve(by_point.size());
  for (auto& [pt, through] : by_point)
    flats.push_back({pt, std::vector<int>(through.begin(), through.end())});
  Int pairs = 0;
  for (const Flat& f : flats) pairs += binomial2(Int(f.multiplicity()));
  if (pairs != binomial2(Int(a.n())))
    throw InvariantError("intersection_lattice: point multiplicities do not account for all "
                         "line pairs");
  return flats;
}

CharPoly char_poly(const std::vector<Flat>& flats, int n) {
  Int sum = 0;
  for (const Flat& f : flats) sum += f.multiplicity() - 1;
  return {Int(n - 1), sum - (n - 1)};
}

Int tau_from_lattice(const std::vector<Flat>& flats) {
  Int t = 0;
  for (const Flat& f : flats) t += Int(f.multiplicity() - 1) * Int(f.multiplicity() - 1);
  return t;
}

int Multi2D::total() const {
  int t = 0;
  for (const MultiPoint& p : points) t += p.mult;
  return t;
}

Multi2D multi_restriction(const Arrangement& a, int h) {
  if (h < 0 || h >= a.n()) throw std::invalid_argument("multi_restriction: bad line index");
  const LinForm& line = a.lines[h];
  auto pts = line_points(line);
  auto coeffs = line.coeffs();
  int pivot = coeffs[0] != 0 ? 0 : coeffs[1] != 0 ? 1 : 2;
  QMatrix m(3, 4);  // coordinate change with a solve column appended per point
  for (int r = 0; r < 3; ++r) {
    m.at(r, 0) = pts[0][r];
    m.at(r, 1) = pts[1][r];
  }
  m.at(pivot, 2) = 1 / coeffs[pivot];

  Multi2D out;
  for (const Flat& fl : intersection_lattice(a)) {
    if (!std::binary_search(fl.lines.begin(), fl.lines.end(), h)) continue;
    for (int r = 0; r < 3; ++r) m.at(r, 3) = Rat(fl.point[r]);
    Echelon e = reduced_echelon(m);
    if (e.pivot_cols != std::vector<int>{0, 1, 2})
      throw InvariantError("multi_restriction: coordinate change is singular");
    std::array<Rat, 3> local{e.rref.at(0, 3), e.rref.at(1, 3), e.rref.at(2, 3)};
    if (local[2] != 0)
      throw InvariantError("multi_restriction: intersection point is off its line");
    auto form = canonical_triple({local[1], -local[0], Rat(0)});
    out.points.push_back({{form[0], form[1]}, fl.multiplicity() - 1});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const MultiPoint& x, const MultiPoint& y) { return x.form < y.form; });
  if (out.total() != a.n() - 1)
    throw InvariantError("multi_restriction: multiplicities do not sum to n-1");
  return out;
}

int multi_der_dim(const Multi2D& m, int k) {
  if (k < 0) return 0;
  int cols = 2 * (k + 1);
  int rows = 0;
  for (const MultiPoint& p : m.points) rows += std::min(p.mult, k + 1);
  QMatrix sys(rows, cols);
  int r0 = 0;
  for (const MultiPoint& p : m.points) {
    Rat pr(p.form[0]), qr(p.form[1]);
    // substitution with the point's form going to t: u,v in terms of s,t
    std::array<std::array<Rat, 2>, 2> w{};
    w[0][0] = -qr;
    w[1][0] = pr;
    if (pr != 0) {
      w[0][1] = 1 / pr;
    } else {
      w[1][1] = 1 / qr;
    }
    int ncons = std::min(p.mult, k + 1);
    for (int i = 0; i <= k; ++i) {
      BinForm mu(k);
      mu.c[i] = 1;
      BinForm s = bin_subst(mu, w);
      for (int j = 0; j < ncons; ++j) {
        if (s.c[j] == 0) continue;
        sys.at(r0 + j, i) += pr * s.c[j];
        sys.at(r0 + j, k + 1 + i) += qr * s.c[j];
      }
    }
    r0 += ncons;
  }
  return cols - rank(sys);
}

std::pair<int, int> multi_exponents(const Multi2D& m) {
  int total = m.total();
  int e1 = -1, e2 = -1;
  std::vector<int> dims;
  for (int k = 0; e1 < 0; ++k) {
    if (2 * k > total + 2)
      throw InvariantError("multi_exponents: no derivation through half the total multiplicity");
    int dim = multi_der_dim(m, k);
    dims.push_back(dim);
    if (dim == 0) continue;
    e1 = k;
    if (dim >= 2) {
      if (2 * k != total)
        throw InvariantError("multi_exponents: two derivations in degree " + std::to_string(k) +
                             " with total multiplicity " + std::to_string(total));
      e2 = k;
    } else {
      e2 = total - k;
    }
  }
  for (int k = 0; k <= e2 + 1; ++k) {
    int dim = k < static_cast<int>(dims.size()) ? dims[k] : multi_der_dim(m, k);
    int expect = std::max(0, k - e1 + 1) + std::max(0, k - e2 + 1);
    if (dim != expect)
      throw InvariantError("multi_exponents: dimension " + std::to_string(dim) + " in degree " +
                           std::to_string(k) + ", expected " + std::to_string(expect) +
                           " for exponents (" + std::to_string(e1) + "," + std::to_string(e2) +
                           ")");
  }
  return {e1, e2};
}

RestrictionFreeness restriction_freeness_test(const Arrangement& a) {
  CharPoly chi = char_poly(intersection_lattice(a), a.n());
  RestrictionFreeness out;
  std::optional<bool> freeness;
  for (int h = 0; h < a.n(); ++h) {
    auto e = multi_exponents(multi_restriction(a, h));
    Int diff = chi.b2 - Int(e.first) * Int(e.second);
    if (diff < 0)
      throw InvariantError("restriction_freeness_test: b2 below exponent product at line " +
                           std::to_string(h));
    bool free_here = diff == 0;
    if (freeness && *freeness != free_here)
      throw InvariantError("restriction_freeness_test: lines disagree on freeness");
    freeness = free_here;
    out.diffs.push_back(diff);
    out.exponents.push_back(e);
  }
  out.free = freeness.value_or(false);
  return out;
}

NearFreeRestriction nearfree_test(const RestrictionFreeness& rf) {
  for (size_t h = 0; h < rf.diffs.size(); ++h)
    if (rf.diffs[h] == 1) return {true, static_cast<int>(h)};
  return {};
}

std::string verdict_name(ArrVerdict v) {
  switch (v) {
    case ArrVerdict::Free: return "free";
    case ArrVerdict::NearlyFree: return "nearly_free";
    case ArrVerdict::Neither: return "neither";
    case ArrVerdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

SmallRestrictionDecision small_restriction_decide(const Arrangement& a) {
  auto flats = intersection_lattice(a);
  CharPoly chi = char_poly(flats, a.n());
  SmallRestrictionDecision out;
  out.chi_perfect_square = chi.b1 % 2 == 0 && (chi.b1 / 2) * (chi.b1 / 2) == chi.b2;
  int n = a.n();
  for (int h = 0; h < n; ++h) {
    int count = 0, mmax = 0;
    for (const Flat& fl : flats)
      if (std::binary_search(fl.lines.begin(), fl.lines.end(), h)) {
        ++count;
        mmax = std::max(mmax, fl.multiplicity());
      }
    if (count > 4 || 2 * mmax >= n) continue;
    auto e = multi_exponents(multi_restriction(a, h));
    if (e.second - e.first > 2)
      throw InvariantError("small_restriction_decide: exponent gap above 2 at line " +
                           std::to_string(h));
    Int delta = chi.b2 - Int(e.first) * Int(e.second);
    out.applicable = true;
    out.h = h;
    out.exponents = e;
    out.b2_diff = delta;
    if (delta == 0) {
      out.verdict = ArrVerdict::Free;
    } else if (delta == 1) {
      out.verdict = ArrVerdict::NearlyFree;
    } else if (e.second - e.first <= 1) {
      out.verdict = ArrVerdict::Neither;
    } else {
      out.verdict = ArrVerdict::Neither;
      if (auto roots = int_roots(Int(n - 1), chi.b2 - 1)) {
        for (Int t0 : {roots->first, roots->second}) {
          Int d1 = t0, d2 = Int(n) - t0;
          if (d1 >= 1 && d1 <= d2 && Int(e.first) == d1 - 1 && Int(e.second) == d2)
            out.verdict = ArrVerdict::NearlyFree;
        }
      }
    }
    return out;
  }
  return out;
}

UnbalancedDecision unbalanced_decide(const Arrangement& a, int h) {
  Multi2D m = multi_restriction(a, h);
  int total = m.total();
  int mmax = 0;
  for (const MultiPoint& p : m.points) mmax = std::max(mmax, p.mult);
  UnbalancedDecision out;
  if (2 * mmax < total) return out;
  out.applicable = true;
  std::pair<int, int> e{total - mmax, mmax};
  if (multi_exponents(m) != e)
    throw InvariantError("unbalanced_decide: computed exponents differ from the dominant "
                         "multiplicity pattern");
  out.exponents = e;
  CharPoly chi = char_poly(intersection_lattice(a), a.n());
  Int delta = chi.b2 - Int(e.first) * Int(e.second);
  out.b2_diff = delta;
  if (delta < 0) throw InvariantError("unbalanced_decide: b2 below exponent product");
  out.verdict = delta == 0   ? ArrVerdict::Free
                : delta == 1 ? ArrVerdict::NearlyFree
                             : ArrVerdict::Neither;
  return out;
}

AdditionDeletion addition_deletion(const Arrangement& a, int h) {
  int n = a.n();
  if (n < 2) throw std::invalid_argument("addition_deletion: need at least two lines");
  if (h < 0 || h >= n) throw std::invalid_argument("addition_deletion: bad line index");
  Arrangement b;
  for (int i = 0; i < n; ++i)
    if (i != h) b.lines.push_back(a.lines[i]);

  AdditionDeletion out;
  out.h = h;
  for (const Flat& fl : intersection_lattice(a))
    if (std::binary_search(fl.lines.begin(), fl.lines.end(), h)) ++out.restriction_count;

  CurveAnalyzer ca(a.defining_poly());
  CurveAnalyzer cb(b.defining_poly());
  out.class_a = ca.classify();
  out.class_b = cb.classify();
  bool a_free = out.class_a == CurveClass::Free || out.class_a == CurveClass::Pencil;
  bool b_free = out.class_b == CurveClass::Free || out.class_b == CurveClass::Pencil;
  bool a_nearly = out.class_a == CurveClass::NearlyFree;
  bool b_nearly = out.class_b == CurveClass::NearlyFree;
  std::optional<ExponentPair> ea, eb;
  if (out.class_a != CurveClass::Other) ea = ca.exponents();
  if (out.class_b != CurveClass::Other) eb = cb.exponents();
  int t = out.restriction_count;
  auto pair_str = [](const ExponentPair& p) {
    return "(" + std::to_string(p.d1) + "," + std::to_string(p.d2) + ")";
  };

  {
    Implication imp{"nearly_addition", false, false, ""};
    imp.premises_hold = b_free && t == eb->d2 + 2;
    imp.conclusion_holds =
        a_nearly && ea && eb && *ea == ExponentPair{eb->d1 + 1, eb->d2 + 1};
    imp.detail = "restriction count " + std::to_string(t) +
                 (eb ? ", smaller arrangement exponents " + pair_str(*eb) : "");
    out.implications.push_back(imp);
  }
  {
    Implication imp{"nearly_deletion", false, false, ""};
    imp.premises_hold = a_free && t == ea->d1;
    imp.conclusion_holds = b_nearly;
    imp.detail = "restriction count " + std::to_string(t) +
                 (ea ? ", exponents " + pair_str(*ea) : "");
    out.implications.push_back(imp);
  }
  {
    // Any two of {A nearly free with (d1+1, d2+1); B free with (d1, d2);
    // restriction count d2 + 2} imply the third.
    Implication imp{"two_of_three_addition", false, true, ""};
    std::set<std::pair<int, int>> bindings;
    if (b_free && eb) bindings.insert({eb->d1, eb->d2});
    if (a_nearly && ea) bindings.insert({ea->d1 - 1, ea->d2 - 1});
    for (auto [d1, d2] : bindings) {
      int held = 0;
      held += a_nearly && ea && *ea == ExponentPair{d1 + 1, d2 + 1} ? 1 : 0;
      held += b_free && eb && *eb == ExponentPair{d1, d2} ? 1 : 0;
      held += t == d2 + 2 ? 1 : 0;
      if (held >= 2) {
        imp.premises_hold = true;
        if (held == 2) imp.conclusion_holds = false;
        imp.detail = "binding (" + std::to_string(d1) + "," + std::to_string(d2) + "), " +
                     std::to_string(held) + " of 3 conditions hold";
      }
    }
    out.implications.push_back(imp);
  }
  {
    // Any two of {A free with (d1, d2); B nearly free with (d1, d2);
    // restriction count d1} imply the third.
    Implication imp{"two_of_three_deletion", false, true, ""};
    std::set<std::pair<int, int>> bindings;
    if (a_free && ea) bindings.insert({ea->d1, ea->d2});
    if (b_nearly && eb) bindings.insert({eb->d1, eb->d2});
    for (auto [d1, d2] : bindings) {
      int held = 0;
      held += a_free && ea && *ea == ExponentPair{d1, d2} ? 1 : 0;
      held += b_nearly && eb && *eb == ExponentPair{d1, d2} ? 1 : 0;
      held += t == d1 ? 1 : 0;
      if (held >= 2) {
        imp.premises_hold = true;
        if (held == 2) imp.conclusion_holds = false;
        imp.detail = "binding (" + std::to_string(d1) + "," + std::to_string(d2) + "), " +
                     std::to_string(held) + " of 3 conditions hold";
      }
    }
    out.implications.push_back(imp);
  }
  {
    // Restriction-count test: with integer roots r1 <= r2 of
    // t^2 - b1*t + (b2 - 1), a count of r2 + 1, or r1 + 1 when r2 != r1 + 2,
    // forces A nearly free.
    Implication imp{"nearly_by_restriction_count", false, false, ""};
    CharPoly chi = char_poly(intersection_lattice(a), n);
    if (auto roots = int_roots(chi.b1, chi.b2 - 1)) {
      Int r1 = roots->first, r2 = roots->second;
      imp.premises_hold = Int(t) == r2 + 1 || (Int(t) == r1 + 1 && r2 != r1 + 2);
      imp.detail = "roots " + r1.get_str() + ", " + r2.get_str() + ", restriction count " +
                   std::to_string(t);
    } else {
      imp.detail = "no integer roots";
    }
    imp.conclusion_holds = a_nearly;
    out.implications.push_back(imp);
  }
  return out;
}

}  // namespace logsplit

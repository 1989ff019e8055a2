#include "logsplit/report.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "logsplit/errors.hpp"

namespace logsplit {

namespace {

using json = nlohmann::ordered_json;

long jint(const Int& v) { return to_long(v); }

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
std::string split_str(const SplitType& t) { return pair_str(t.d1, t.d2); }

ArrVerdict verdict_from_nu(int nu) {
  if (nu == 0) return ArrVerdict::Free;
  if (nu == 1) return ArrVerdict::NearlyFree;
  return ArrVerdict::Neither;
}

// Each check either returns (pass, witness) or throws InvariantError, which
// is recorded as a failure rather than aborting the report.
void run_check(std::vector<Check>& out, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, wit] = body();
    out.push_back({name, ok, wit});
  } catch (const InvariantError& e) {
    out.push_back({name, false, e.what()});
  }
}

std::vector<SplitType> distinct_types(const std::vector<LineReport>& lines) {
  std::vector<SplitType> ts;
  for (const auto& l : lines) ts.push_back(l.splitting);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

SplitType sorted_pair(int a, int b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

// Theorem checks that need only the classification data.
void classification_checks(FullReport& r) {
  const int d = r.degree;
  const Int dm1 = Int(d) - 1;

  run_check(r.checks, "tau_range", [&] {
    bool ok = r.tau_range.tau_min <= r.tau && r.tau <= r.tau_range.tau_max;
    std::ostringstream os;
    os << "tau " << r.tau.get_str() << " in [" << r.tau_range.tau_min.get_str() << ", "
       << r.tau_range.tau_max.get_str() << "] for mdr " << r.mdr;
    return std::make_pair(ok, os.str());
  });

  run_check(r.checks, "classification_consistent", [&] {
    std::string wit = class_name(r.cls);
    switch (r.cls) {
      case CurveClass::Pencil:
        if (r.mdr != 0 || r.tau != dm1 * dm1) return std::make_pair(false, wit);
        break;
      case CurveClass::Free: {
        auto [e1, e2] = *r.exponents;
        bool ok = r.nu == 0 && 2 * r.mdr <= d - 1 && e1 == r.mdr && e1 + e2 == d - 1 &&
                  r.tau == dm1 * dm1 - Int(e1) * Int(e2);
        wit += " exponents " + pair_str(e1, e2);
        if (!ok) return std::make_pair(false, wit);
        break;
      }
      case CurveClass::NearlyFree: {
        auto [e1, e2] = *r.exponents;
        bool ok = r.nu == 1 && 2 * r.mdr <= d && e1 == r.mdr && e1 + e2 == d &&
                  dm1 * dm1 - r.tau == Int(e1) * (Int(e2) - 1) + 1;
        wit += " exponents " + pair_str(e1, e2);
        if (!ok) return std::make_pair(false, wit);
        break;
      }
      case CurveClass::Other:
        if (r.nu < 2 && r.mdr != 0) return std::make_pair(false, wit + " but nu < 2");
        break;
    }
    return std::make_pair(true, wit + ", nu " + std::to_string(r.nu));
  });

  run_check(r.checks, "chern_consistent", [&] {
    bool ok = r.chern.c1 == -(dm1) && r.chern.c2 == dm1 * dm1 - r.tau;
    return std::make_pair(ok, "c1 " + r.chern.c1.get_str() + ", c2 " + r.chern.c2.get_str());
  });
}

void curve_checks(CurveAnalyzer& c, FullReport& r) {
  const int d = r.degree;

  run_check(r.checks, "jacobian_rank_dual", [&] {
    for (int k : {d - 1, d}) {
      int direct = c.jacobian_piece(k).dim();
      int via_syzygies = c.jacobian_rank(k);
      if (direct != via_syzygies)
        return std::make_pair(false, "degree " + std::to_string(k) + ": " +
                                         std::to_string(direct) + " vs " +
                                         std::to_string(via_syzygies));
    }
    return std::make_pair(true, std::string("row-space and syzygy ranks agree at degrees ") +
                                    std::to_string(d - 1) + ", " + std::to_string(d));
  });

  run_check(r.checks, "saturation_entry", [&] {
    c.saturated_piece(std::max(3 * d - 5, 0));
    return std::make_pair(true, std::string("ideal-quotient tower verified at its root"));
  });

  run_check(r.checks, "defect_symmetry", [&] {
    int t = 3 * (d - 2);
    if (t < 0) return std::make_pair(true, std::string("no defect range in degree ") +
                                               std::to_string(d));
    std::string wit;
    for (int k = t / 2; k >= 0 && k >= t / 2 - 1; --k) {
      int lo = c.defect_dim(k), hi = c.defect_dim(t - k);
      if (lo != hi)
        return std::make_pair(false, "dim N_" + std::to_string(k) + " = " + std::to_string(lo) +
                                         " != dim N_" + std::to_string(t - k) + " = " +
                                         std::to_string(hi));
      wit += (wit.empty() ? "" : ", ") + std::to_string(lo) + " at degrees " + std::to_string(k) +
             "/" + std::to_string(t - k);
    }
    return std::make_pair(true, wit);
  });

  run_check(r.checks, "generator_degrees", [&] {
    const auto& gen = r.gen_degrees;
    std::string wit;
    for (auto [k, cnt] : gen) wit += (wit.empty() ? "" : ", ") + std::to_string(cnt) + " in degree " + std::to_string(k);
    if (gen.empty() || gen.front().first != r.mdr)
      return std::make_pair(false, "first generator degree is not mdr: " + wit);
    std::vector<std::pair<int, int>> want;
    if (r.cls == CurveClass::Pencil || r.cls == CurveClass::Free) {
      auto [e1, e2] = *r.exponents;
      want = e1 == e2 ? std::vector<std::pair<int, int>>{{e1, 2}}
                      : std::vector<std::pair<int, int>>{{e1, 1}, {e2, 1}};
    } else if (r.cls == CurveClass::NearlyFree) {
      auto [e1, e2] = *r.exponents;
      want = e1 == e2 ? std::vector<std::pair<int, int>>{{e1, 3}}
                      : std::vector<std::pair<int, int>>{{e1, 1}, {e2, 2}};
    }
    if (!want.empty() && gen != want)
      return std::make_pair(false, "generators " + wit + " do not match the exponents");
    return std::make_pair(true, wit);
  });
}

void splitting_checks(CurveAnalyzer& c, FullReport& r) {
  if (!r.generic) return;
  const int d = r.degree;
  const SplitType g = *r.generic;
  const Int dm1 = Int(d) - 1;
  const auto types = distinct_types(r.lines);

  run_check(r.checks, "splitting_window", [&] {
    int lo = std::max(r.mdr - r.nu, 0);
    int hi = std::min(r.mdr, (d - 1) / 2);
    if (g.d1 > hi)
      return std::make_pair(false, "generic d1 " + std::to_string(g.d1) + " above " +
                                       std::to_string(hi));
    for (const auto& l : r.lines)
      if (l.splitting.d1 < lo || l.splitting.d1 > g.d1)
        return std::make_pair(false, "line " + l.line.to_string() + " has d1 " +
                                         std::to_string(l.splitting.d1) + " outside [" +
                                         std::to_string(lo) + ", " + std::to_string(g.d1) + "]");
    return std::make_pair(true, "d1 in [" + std::to_string(lo) + ", " + std::to_string(g.d1) +
                                    "] on " + std::to_string(r.lines.size()) + " lines");
  });

  run_check(r.checks, "splitting_image_size", [&] {
    bool ok = static_cast<int>(types.size()) <= r.nu + 1;
    std::string wit = std::to_string(types.size()) + " distinct types, nu " + std::to_string(r.nu);
    return std::make_pair(ok, wit);
  });

  if (r.cls == CurveClass::Free) {
    run_check(r.checks, "free_image", [&] {
      auto [e1, e2] = *r.exponents;
      if (!(g == SplitType{e1, e2}))
        return std::make_pair(false, "generic " + split_str(g) + " differs from exponents");
      for (const auto& l : r.lines)
        if (!(l.splitting == g))
          return std::make_pair(false,
                                "line " + l.line.to_string() + " splits " + split_str(l.splitting));
      return std::make_pair(true, "every line splits " + split_str(g));
    });
  }

  if (r.cls == CurveClass::NearlyFree) {
    run_check(r.checks, "nearly_free_image", [&] {
      auto [e1, e2] = *r.exponents;
      std::set<SplitType> allowed{sorted_pair(e1 - 1, e2), sorted_pair(e1, e2 - 1)};
      for (const auto& t : types)
        if (!allowed.count(t))
          return std::make_pair(false, "type " + split_str(t) + " outside the two-value image");
      std::string wit;
      for (const auto& t : types) wit += (wit.empty() ? "" : ", ") + split_str(t);
      return std::make_pair(true, "types " + wit);
    });
  }

  run_check(r.checks, "generic_vs_exponents", [&] {
    if (r.cls == CurveClass::Free) {
      auto [e1, e2] = *r.exponents;
      bool ok = g == SplitType{e1, e2};
      return std::make_pair(ok, "generic " + split_str(g) + ", exponents " + pair_str(e1, e2));
    }
    if (r.cls == CurveClass::NearlyFree) {
      auto [e1, e2] = *r.exponents;
      bool ok = g == sorted_pair(e1, e2 - 1);
      return std::make_pair(ok, "generic " + split_str(g) + ", exponents " + pair_str(e1, e2));
    }
    return std::make_pair(true, std::string("no exponents to compare"));
  });

  run_check(r.checks, "tau_defect_bound", [&] {
    Int bound = line_defect(d, g);
    bool ok = r.tau <= bound && (r.tau == bound) == (r.nu == 0);
    return std::make_pair(ok, "tau " + r.tau.get_str() + ", generic line defect " +
                                  bound.get_str());
  });

  run_check(r.checks, "min_line_defect", [&] {
    Int best = -1;
    for (const auto& l : r.lines)
      if (best < 0 || l.defect < best) best = l.defect;
    bool ok = best == r.tau + r.nu;
    return std::make_pair(ok, "min defect " + best.get_str() + ", tau + nu = " +
                                  Int(r.tau + r.nu).get_str());
  });

  run_check(r.checks, "unbalanced_mdr", [&] {
    if (2 * g.d1 >= d - 2)
      return std::make_pair(true, std::string("balanced generic type, nothing to check"));
    bool ok = r.mdr == g.d1;
    return std::make_pair(ok, "generic d1 " + std::to_string(g.d1) + ", mdr " +
                                  std::to_string(r.mdr));
  });

  run_check(r.checks, "tau_discriminant", [&] {
    Int disc = 4 * r.tau - 3 * dm1 * dm1;
    Int gap = dm1 - 2 * g.d1;
    bool lhs = disc >= 0;
    bool rhs = gap * gap >= 4 * Int(r.nu);
    std::string wit = "4*tau - 3*(d-1)^2 = " + disc.get_str() + ", (d-1-2*d1)^2 = " +
                      Int(gap * gap).get_str() + ", 4*nu = " + std::to_string(4 * r.nu);
    if (lhs != rhs) return std::make_pair(false, wit);
    if (lhs && r.mdr != g.d1) return std::make_pair(false, wit + "; mdr != generic d1");
    return std::make_pair(true, wit);
  });

  run_check(r.checks, "type_count_bounds", [&] {
    Int disc = 4 * r.tau - 3 * dm1 * dm1;
    if (disc < 0) return std::make_pair(true, std::string("negative discriminant, no bound"));
    int s = static_cast<int>(types.size());
    Int gap = dm1 - 2 * r.mdr;
    bool ok = Int(s - 1) <= r.nu && 4 * Int(r.nu) <= gap * gap;
    return std::make_pair(ok, std::to_string(s) + " types, nu " + std::to_string(r.nu) +
                                  ", (d-1-2r)^2 = " + Int(gap * gap).get_str());
  });

  run_check(r.checks, "defect_multiplication_injective", [&] {
    if (d < 3 || !r.generic_witness)
      return std::make_pair(true, std::string("degree below 3, nothing to check"));
    QMatrix m = mult_map(r.generic_witness->to_poly(), d - 3);
    int ker = induced_kernel_dim(m, c.saturated_piece(d - 3), c.jacobian_piece(d - 3),
                                 c.saturated_piece(d - 2), c.jacobian_piece(d - 2));
    bool ok = ker == 0;
    return std::make_pair(ok, "kernel of the witness line on N_" + std::to_string(d - 3) +
                                  " -> N_" + std::to_string(d - 2) + " has dimension " +
                                  std::to_string(ker));
  });
}

void arrangement_checks(CurveAnalyzer& c, const Arrangement& a, FullReport& r) {
  ArrangementReport& ar = *r.arrangement;
  const int n = ar.n;
  const Int nm1 = Int(n) - 1;

  run_check(r.checks, "tau_lattice_agreement", [&] {
    bool ok = ar.tau_lattice == r.tau;
    return std::make_pair(ok, "lattice " + ar.tau_lattice.get_str() + ", syzygy route " +
                                  r.tau.get_str());
  });

  run_check(r.checks, "char_poly_tau", [&] {
    bool ok = ar.chi.b1 == nm1 && ar.chi.b2 == nm1 * nm1 - r.tau;
    return std::make_pair(ok, "b2 " + ar.chi.b2.get_str() + ", (n-1)^2 - tau = " +
                                  Int(nm1 * nm1 - r.tau).get_str());
  });

  run_check(r.checks, "restriction_sum", [&] {
    for (const auto& rr : ar.restrictions)
      if (rr.exponents.first + rr.exponents.second != n - 1)
        return std::make_pair(false, "line " + std::to_string(rr.h) + " exponents " +
                                         pair_str(rr.exponents.first, rr.exponents.second));
    return std::make_pair(true, "e1 + e2 = " + std::to_string(n - 1) + " on every line");
  });

  run_check(r.checks, "splitting_restriction_agreement", [&] {
    for (const auto& rr : ar.restrictions) {
      SplitType s = r.lines[rr.h].splitting;
      if (s.d1 != rr.exponents.first || s.d2 != rr.exponents.second)
        return std::make_pair(false, "line " + std::to_string(rr.h) + ": splitting " +
                                         split_str(s) + " vs restriction exponents " +
                                         pair_str(rr.exponents.first, rr.exponents.second));
    }
    return std::make_pair(true, "splitting equals restriction exponents on all " +
                                    std::to_string(n) + " lines");
  });

  run_check(r.checks, "freeness_by_restriction", [&] {
    bool free_alg = r.nu == 0;
    RestrictionFreeness rf;
    rf.free = true;
    for (const auto& rr : ar.restrictions) rf.free = rf.free && rr.b2_diff == 0;
    bool ok = rf.free == free_alg;
    return std::make_pair(ok, std::string("restriction route says ") +
                                  (rf.free ? "free" : "not free") + ", nu " +
                                  std::to_string(r.nu));
  });

  run_check(r.checks, "nearfree_by_restriction", [&] {
    for (const auto& rr : ar.restrictions)
      if (rr.nearfree && r.nu != 1)
        return std::make_pair(false, "diff 1 at line " + std::to_string(rr.h) + " but nu " +
                                         std::to_string(r.nu));
    return std::make_pair(true, std::string("diff-one criterion consistent"));
  });

  run_check(r.checks, "chi_factors", [&] {
    if (!r.exponents) return std::make_pair(true, std::string("no exponents, nothing to factor"));
    auto [e1, e2] = *r.exponents;
    Int want = r.cls == CurveClass::NearlyFree ? Int(Int(e1) * (Int(e2) - 1) + 1)
                                               : Int(Int(e1) * Int(e2));
    bool ok = ar.chi.b2 == want;
    return std::make_pair(ok, "b2 " + ar.chi.b2.get_str() + ", from exponents " +
                                  want.get_str());
  });

  run_check(r.checks, "small_restriction_agreement", [&] {
    if (!ar.decision.applicable)
      return std::make_pair(true, std::string("no qualifying restriction"));
    bool ok = ar.decision.verdict == verdict_from_nu(r.nu);
    return std::make_pair(ok, "decision " + verdict_name(ar.decision.verdict) + " via line " +
                                  std::to_string(ar.decision.h) + ", nu " + std::to_string(r.nu));
  });

  run_check(r.checks, "unbalanced_agreement", [&] {
    if (ar.unbalanced_lines.empty())
      return std::make_pair(true, std::string("no unbalanced restriction"));
    for (int h : ar.unbalanced_lines) {
      UnbalancedDecision ud = unbalanced_decide(a, h);
      if (!ud.applicable || ud.verdict != verdict_from_nu(r.nu))
        return std::make_pair(false, "line " + std::to_string(h) + " decides " +
                                         verdict_name(ud.verdict) + ", nu " +
                                         std::to_string(r.nu));
    }
    return std::make_pair(true, std::to_string(ar.unbalanced_lines.size()) +
                                    " unbalanced lines all agree with nu " +
                                    std::to_string(r.nu));
  });

  if (!ar.additions.empty()) {
    run_check(r.checks, "addition_deletion_respected", [&] {
      for (const auto& ad : ar.additions)
        for (const auto& imp : ad.implications)
          if (!imp.respected())
            return std::make_pair(false, "line " + std::to_string(ad.h) + ": " + imp.name +
                                             " premises hold but conclusion fails");
      return std::make_pair(true, "all implications respected on " +
                                      std::to_string(ar.additions.size()) + " deletions");
    });
  }

  // Suppress the unused-capture warning path: c participates through r.lines.
  (void)c;
}

void build_lines_and_generic(CurveAnalyzer& c, FullReport& r, const ReportOptions& opt,
                             const std::vector<LinForm>* members) {
  const int d = r.degree;
  if (members) {
    for (const auto& l : *members) {
      SplitType t = r.cls == CurveClass::Pencil ? SplitType{0, d - 1} : splitting_type(c, l);
      r.lines.push_back({l, t, line_defect(d, t), true});
    }
  }
  if (r.cls == CurveClass::Pencil) return;  // the bundle splits globally

  SampleConfig cfg;
  cfg.seed = opt.seed;
  cfg.coeff_box = opt.coeff_box;
  GenericSplit gs = generic_splitting(c, cfg);
  r.generic = gs.type;
  r.generic_witness = gs.witness;
  for (const auto& [t, l] : gs.samples) r.lines.push_back({l, t, line_defect(d, t), false});
}

FullReport analyze_common(CurveAnalyzer& c, const ReportOptions& opt,
                          const std::vector<LinForm>* members, const ReducedWitness& rw) {
  FullReport r;
  r.degree = c.degree();
  r.tau = c.tau();
  r.mdr = c.mdr();
  r.nu = c.nu();
  r.chern = c.chern();
  r.cls = c.classify();
  if (r.cls != CurveClass::Other) r.exponents = c.exponents();
  r.tau_range = tau_admissible_range(r.degree, r.mdr);
  r.gen_degrees = c.min_gen_degrees(std::max(opt.kmax, r.degree));

  build_lines_and_generic(c, r, opt, members);

  r.checks.push_back({"reduced_witness", rw.passed,
                      rw.exact ? "exact: pairwise distinct factors"
                               : "squarefree restriction found after " +
                                     std::to_string(rw.trials) + " trial(s)"});
  classification_checks(r);
  curve_checks(c, r);
  splitting_checks(c, r);
  return r;
}

}  // namespace

bool FullReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

FullReport analyze_curve(const HomPoly& f, const ReportOptions& opt) {
  ReducedWitness rw = squarefree_witness(f, opt.seed);
  if (!rw.passed)
    throw InvariantError("could not certify the curve reduced after " +
                         std::to_string(rw.trials) + " restriction trials");
  CurveAnalyzer c(f);
  return analyze_common(c, opt, nullptr, rw);
}

FullReport analyze_arrangement(const Arrangement& a, const ReportOptions& opt) {
  CurveAnalyzer c(a.defining_poly());
  ReducedWitness rw{true, true, 0};  // parsing rejects repeated lines
  FullReport r = analyze_common(c, opt, &a.lines, rw);

  ArrangementReport ar;
  ar.n = a.n();
  ar.flats = intersection_lattice(a);
  ar.chi = char_poly(ar.flats, ar.n);
  ar.tau_lattice = tau_from_lattice(ar.flats);

  RestrictionFreeness rf = restriction_freeness_test(a);
  for (int h = 0; h < ar.n; ++h)
    ar.restrictions.push_back({h, rf.exponents[h], rf.diffs[h], rf.diffs[h] == 1});
  ar.decision = small_restriction_decide(a);

  for (int h = 0; h < ar.n; ++h) {
    UnbalancedDecision ud = unbalanced_decide(a, h);
    if (ud.applicable) {
      ar.unbalanced_lines.push_back(h);
      if (ar.unbalanced_verdict == ArrVerdict::Indeterminate) ar.unbalanced_verdict = ud.verdict;
    }
  }

  if (r.cls == CurveClass::NearlyFree) {
    auto [e1, e2] = *r.exponents;
    SplitType second = sorted_pair(e1, e2 - 1);
    for (const auto& rr : ar.restrictions)
      if (rr.exponents.first == second.d1 && rr.exponents.second == second.d2) {
        ar.has_second_type = true;
        ar.second_type_witness = rr.h;
        break;
      }
  }

  if (opt.with_addition)
    for (int h = 0; h < ar.n; ++h) ar.additions.push_back(addition_deletion(a, h));

  r.arrangement = std::move(ar);
  arrangement_checks(c, a, r);
  return r;
}

nlohmann::ordered_json report_json(const FullReport& r) {
  json j;
  j["degree"] = r.degree;
  j["tau"] = jint(r.tau);
  j["mdr"] = r.mdr;
  j["nu"] = r.nu;
  j["chern"] = json::array({jint(r.chern.c1), jint(r.chern.c2)});
  j["classification"] = class_name(r.cls);
  if (r.exponents)
    j["exponents"] = json::array({r.exponents->d1, r.exponents->d2});
  else
    j["exponents"] = nullptr;
  {
    json g = json::array();
    for (auto [k, cnt] : r.gen_degrees) g.push_back(json::array({k, cnt}));
    j["generator_degrees"] = g;
  }
  if (r.generic)
    j["generic_splitting"] = json::array({r.generic->d1, r.generic->d2});
  else
    j["generic_splitting"] = nullptr;
  j["tau_range"] = {{"min", jint(r.tau_range.tau_min)}, {"max", jint(r.tau_range.tau_max)}};

  json lines = json::array();
  for (const auto& l : r.lines) {
    auto t = l.line.canonical();
    json e;
    e["line"] = json::array({jint(t[0]), jint(t[1]), jint(t[2])});
    e["splitting"] = json::array({l.splitting.d1, l.splitting.d2});
    e["defect"] = jint(l.defect);
    e["member"] = l.member;
    lines.push_back(e);
  }
  j["lines"] = lines;

  if (r.arrangement) {
    const ArrangementReport& ar = *r.arrangement;
    json a;
    a["n"] = ar.n;
    a["char_poly"] = json::array({jint(ar.chi.b1), jint(ar.chi.b2)});
    json pts = json::array();
    for (const auto& fl : ar.flats) {
      json p;
      p["coords"] = json::array({jint(fl.point[0]), jint(fl.point[1]), jint(fl.point[2])});
      p["mult"] = fl.multiplicity();
      p["lines"] = fl.lines;
      pts.push_back(p);
    }
    a["points"] = pts;
    json rs = json::array();
    for (const auto& rr : ar.restrictions) {
      json e;
      e["h_index"] = rr.h;
      e["exponents"] = json::array({rr.exponents.first, rr.exponents.second});
      e["b2_diff"] = jint(rr.b2_diff);
      e["nearfree_test"] = rr.nearfree;
      rs.push_back(e);
    }
    a["restrictions"] = rs;
    {
      json dj;
      dj["applicable"] = ar.decision.applicable;
      dj["verdict"] = verdict_name(ar.decision.verdict);
      dj["h_index"] = ar.decision.applicable ? json(ar.decision.h) : json(nullptr);
      dj["exponents"] = ar.decision.applicable
                            ? json(json::array(
                                  {ar.decision.exponents.first, ar.decision.exponents.second}))
                            : json(nullptr);
      dj["b2_diff"] = ar.decision.applicable ? json(jint(ar.decision.b2_diff)) : json(nullptr);
      dj["chi_perfect_square"] = ar.decision.chi_perfect_square;
      a["restriction_decision"] = dj;
    }
    {
      json bj;
      bj["unbalanced_lines"] = ar.unbalanced_lines;
      bj["verdict"] = verdict_name(ar.unbalanced_verdict);
      a["balanced"] = bj;
    }
    if (r.cls == CurveClass::NearlyFree) {
      json q;
      q["exists"] = ar.has_second_type;
      q["h_index"] = ar.second_type_witness ? json(*ar.second_type_witness) : json(nullptr);
      a["second_type_restriction"] = q;
    } else {
      a["second_type_restriction"] = nullptr;
    }
    if (!ar.additions.empty()) {
      json adds = json::array();
      for (const auto& ad : ar.additions) adds.push_back(addition_json(ad));
      a["additions"] = adds;
    }
    j["arrangement"] = a;
  } else {
    j["arrangement"] = nullptr;
  }

  json checks = json::array();
  for (const auto& ch : r.checks) {
    json e;
    e["name"] = ch.name;
    e["pass"] = ch.passed;
    e["witness"] = ch.witness;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

std::string report_text(const FullReport& r) {
  std::ostringstream os;
  os << "degree " << r.degree << "  tau " << r.tau.get_str() << "  mdr " << r.mdr << "  nu "
     << r.nu << "\n";
  os << "chern (" << r.chern.c1.get_str() << ", " << r.chern.c2.get_str() << ")\n";
  os << "classification " << class_name(r.cls);
  if (r.exponents) os << ", exponents " << pair_str(r.exponents->d1, r.exponents->d2);
  os << "\n";
  os << "tau range [" << r.tau_range.tau_min.get_str() << ", " << r.tau_range.tau_max.get_str()
     << "] for mdr " << r.mdr << "\n";
  os << "syzygy generators:";
  for (auto [k, cnt] : r.gen_degrees) os << " " << cnt << " in degree " << k << ";";
  os << "\n";
  if (r.generic) {
    os << "generic splitting " << split_str(*r.generic);
    if (r.generic_witness) os << " at " << r.generic_witness->to_string();
    os << "\n";
  }
  if (!r.lines.empty()) {
    os << "lines:\n";
    for (const auto& l : r.lines)
      os << "  " << l.line.to_string() << "  splitting " << split_str(l.splitting) << "  defect "
         << l.defect.get_str() << (l.member ? "  member" : "") << "\n";
  }
  if (r.arrangement) {
    const ArrangementReport& ar = *r.arrangement;
    os << "arrangement: n " << ar.n << ", char poly t^2 - " << ar.chi.b1.get_str() << " t + "
       << ar.chi.b2.get_str() << ", lattice tau " << ar.tau_lattice.get_str() << "\n";
    os << "points:\n";
    for (const auto& fl : ar.flats) {
      os << "  (" << fl.point[0].get_str() << ":" << fl.point[1].get_str() << ":"
         << fl.point[2].get_str() << ")  mult " << fl.multiplicity() << "  lines";
      for (int i : fl.lines) os << " " << i;
      os << "\n";
    }
    os << "restrictions:\n";
    for (const auto& rr : ar.restrictions)
      os << "  line " << rr.h << "  exponents " << pair_str(rr.exponents.first, rr.exponents.second)
         << "  b2 diff " << rr.b2_diff.get_str() << (rr.nearfree ? "  nearly-free test" : "")
         << "\n";
    os << "restriction decision: ";
    if (ar.decision.applicable)
      os << verdict_name(ar.decision.verdict) << " via line " << ar.decision.h;
    else
      os << "not applicable";
    if (ar.decision.chi_perfect_square) os << "  [chi has a double root]";
    os << "\n";
    if (!ar.unbalanced_lines.empty()) {
      os << "unbalanced lines:";
      for (int h : ar.unbalanced_lines) os << " " << h;
      os << "  verdict " << verdict_name(ar.unbalanced_verdict) << "\n";
    }
    if (r.cls == CurveClass::NearlyFree) {
      os << "second-type restriction: ";
      if (ar.has_second_type)
        os << "line " << *ar.second_type_witness;
      else
        os << "none";
      os << "\n";
    }
    for (const auto& ad : ar.additions) os << addition_text(ad);
  }
  os << "checks:\n";
  for (const auto& ch : r.checks)
    os << "  [" << (ch.passed ? "PASS" : "FAIL") << "] " << ch.name << ": " << ch.witness << "\n";
  return os.str();
}

nlohmann::ordered_json addition_json(const AdditionDeletion& ad) {
  json j;
  j["h_index"] = ad.h;
  j["restriction_count"] = ad.restriction_count;
  j["with_line"] = class_name(ad.class_a);
  j["without_line"] = class_name(ad.class_b);
  json imps = json::array();
  for (const auto& imp : ad.implications) {
    json e;
    e["name"] = imp.name;
    e["premises"] = imp.premises_hold;
    e["conclusion"] = imp.conclusion_holds;
    e["respected"] = imp.respected();
    e["detail"] = imp.detail;
    imps.push_back(e);
  }
  j["implications"] = imps;
  return j;
}

std::string addition_text(const AdditionDeletion& ad) {
  std::ostringstream os;
  os << "deletion of line " << ad.h << ": " << ad.restriction_count
     << " points on it, with " << class_name(ad.class_a) << ", without "
     << class_name(ad.class_b) << "\n";
  for (const auto& imp : ad.implications)
    os << "  [" << (imp.respected() ? "ok" : "VIOLATED") << "] " << imp.name
       << (imp.premises_hold ? " (premises hold)" : " (premises fail)") << ": " << imp.detail
       << "\n";
  return os.str();
}

}  // namespace logsplit

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "logsplit/errors.hpp"
#include "logsplit/parse.hpp"
#include "logsplit/report.hpp"

namespace {

using namespace logsplit;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LinForm parse_line_option(const std::string& s) {
  std::vector<Rat> v;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    try {
      v.push_back(rat_from_string(item));
    } catch (const std::invalid_argument&) {
      throw ParseError("--line expects numeric coefficients a,b,c, got '" + item + "'");
    }
  }
  if (v.size() != 3) throw ParseError("--line expects three comma-separated coefficients");
  LinForm l{v[0], v[1], v[2]};
  if (l.is_zero()) throw ParseError("--line coefficients are all zero");
  return l;
}

struct Input {
  bool is_arrangement = false;
  HomPoly curve;
  Arrangement arr;
};

Input load_curve(const std::string& expr) {
  Input in;
  in.curve = parse_poly(expr);
  return in;
}

Input load_arrangement(const std::string& path) {
  Input in;
  in.is_arrangement = true;
  in.arr.lines = parse_arrangement(read_file(path));
  return in;
}

// For `verify`: an existing file is an arrangement, anything else a curve.
Input load_any(const std::string& src) {
  if (std::filesystem::exists(src)) return load_arrangement(src);
  return load_curve(src);
}

int emit_report(const FullReport& r, bool as_json) {
  if (as_json)
    std::cout << report_json(r).dump(2) << "\n";
  else
    std::cout << report_text(r);
  return r.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of the logarithmic bundle of a reduced plane curve"};
  app.require_subcommand(1);

  bool as_json = false;
  long long seed_opt = -1;
  int kmax = -1;
  long coeff_box = 97;
  app.add_flag("--json", as_json, "emit the report as JSON");
  app.add_option("--seed", seed_opt, "seed for sampled lines (default: LOGSPLIT_SEED or 1)");
  app.add_option("--kmax", kmax, "scan bound for syzygy generator degrees (default: degree)");
  app.add_option("--coeff-box", coeff_box,
                 "sampled line coefficients are drawn from [-box, box] (default 97)");

  std::string kind, src, line_spec;
  int del_index = -1;

  CLI::App* analyze = app.add_subcommand("analyze", "full invariant and check report");
  analyze->fallthrough();
  analyze->add_option("kind", kind)->required()->check(CLI::IsMember({"curve", "arrangement"}));
  analyze->add_option("src", src, "polynomial expression or arrangement file")->required();

  CLI::App* splitting = app.add_subcommand("splitting", "splitting type along one line");
  splitting->fallthrough();
  splitting->add_option("kind", kind)->required()->check(CLI::IsMember({"curve", "arrangement"}));
  splitting->add_option("src", src)->required();
  splitting->add_option("--line", line_spec, "line coefficients a,b,c")->required();

  CLI::App* verify = app.add_subcommand("verify", "analyze plus every deletion ledger");
  verify->fallthrough();
  verify->add_option("src", src, "arrangement file, or a polynomial expression")->required();

  CLI::App* addition = app.add_subcommand("addition", "addition-deletion ledger for one line");
  addition->fallthrough();
  addition->add_option("file", src)->required();
  addition->add_option("--index", del_index, "line index to delete")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  ReportOptions opt;
  opt.kmax = kmax;
  opt.coeff_box = coeff_box;
  if (seed_opt >= 0) {
    opt.seed = static_cast<unsigned long>(seed_opt);
  } else if (const char* env = std::getenv("LOGSPLIT_SEED")) {
    opt.seed = std::strtoul(env, nullptr, 10);
  }

  try {
    if (*analyze) {
      Input in = kind == "curve" ? load_curve(src) : load_arrangement(src);
      FullReport r =
          in.is_arrangement ? analyze_arrangement(in.arr, opt) : analyze_curve(in.curve, opt);
      return emit_report(r, as_json);
    }
    if (*splitting) {
      Input in = kind == "curve" ? load_curve(src) : load_arrangement(src);
      LinForm l = parse_line_option(line_spec);
      CurveAnalyzer c(in.is_arrangement ? in.arr.defining_poly() : in.curve);
      SplitType t = splitting_type(c, l);
      Int defect = line_defect(c.degree(), t);
      if (as_json) {
        nlohmann::ordered_json j;
        auto cl = l.canonical();
        j["line"] = {to_long(cl[0]), to_long(cl[1]), to_long(cl[2])};
        j["splitting"] = {t.d1, t.d2};
        j["defect"] = to_long(defect);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "[" << t.d1 << "," << t.d2 << "]\n";
      }
      return 0;
    }
    if (*verify) {
      Input in = load_any(src);
      opt.with_addition = in.is_arrangement;
      FullReport r =
          in.is_arrangement ? analyze_arrangement(in.arr, opt) : analyze_curve(in.curve, opt);
      return emit_report(r, as_json);
    }
    if (*addition) {
      Input in = load_arrangement(src);
      if (del_index < 0 || del_index >= in.arr.n())
        throw ParseError("--index out of range for an arrangement of " +
                         std::to_string(in.arr.n()) + " lines");
      AdditionDeletion ad = addition_deletion(in.arr, del_index);
      if (as_json)
        std::cout << addition_json(ad).dump(2) << "\n";
      else
        std::cout << addition_text(ad);
      for (const auto& imp : ad.implications)
        if (!imp.respected()) return 2;
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const GenericityError& e) {
    std::cerr << "genericity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

#include "logsplit/splitting.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "logsplit/errors.hpp"

namespace logsplit {

Int line_defect(int d, SplitType t) {
  return (Int(d) - 1) * (Int(d) - 1) - Int(t.d1) * Int(t.d2);
}

int h0_line(CurveAnalyzer& c, const LinForm& l, int k) {
  if (k < 0) return 0;
  if (l.is_zero()) throw std::invalid_argument("h0_line: zero form");
  int d = c.degree();
  int a = k + d - 2;
  int ker = 0;
  if (a >= 0) {
    QMatrix m = mult_map(l.to_poly(), a);
    ker = induced_kernel_dim(m, c.saturated_piece(a), c.jacobian_piece(a),
                             c.saturated_piece(a + 1), c.jacobian_piece(a + 1));
  }
  return c.syzygy_dim(k) - c.syzygy_dim(k - 1) + ker;
}

SplitType splitting_type(CurveAnalyzer& c, const LinForm& l) {
  if (c.mdr() == 0) throw std::logic_error("splitting_type: pencils are excluded");
  int d = c.degree();
  int half = (d - 1) / 2;
  std::vector<int> h0(1, 0);  // h0[k + 1] for k from -1
  int d1 = -1;
  for (int k = 0; k <= half; ++k) {
    h0.push_back(h0_line(c, l, k));
    if (h0.back() > 0) {
      d1 = k;
      break;
    }
  }
  if (d1 < 0)
    throw InvariantError("splitting_type: no section up to degree " + std::to_string(half));
  int d2 = d - 1 - d1;
  for (int k = static_cast<int>(h0.size()) - 1; k <= d2 + 1; ++k) h0.push_back(h0_line(c, l, k));
  for (int k = 0; k <= d2 + 1; ++k) {
    int expect = std::max(0, k - d1 + 1) + std::max(0, k - d2 + 1);
    if (h0[k + 1] != expect)
      throw InvariantError("splitting_type: h0 profile at twist " + std::to_string(k) + " is " +
                           std::to_string(h0[k + 1]) + ", expected " + std::to_string(expect) +
                           " for type (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
  }
  return {d1, d2};
}

std::vector<SplitType> a_image(CurveAnalyzer& c, const std::vector<LinForm>& lines,
                               const SampleConfig& cfg) {
  std::vector<SplitType> types;
  for (const LinForm& l : lines) types.push_back(splitting_type(c, l));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> coef(-cfg.coeff_box, cfg.coeff_box);
  int valid = 0, draws = 0;
  while (valid < cfg.max_valid && draws < cfg.max_draws) {
    ++draws;
    LinForm l{rat(coef(rng)), rat(coef(rng)), rat(coef(rng))};
    if (l.is_zero() || restrict_to_line(c.poly(), l).is_zero()) continue;
    ++valid;
    types.push_back(splitting_type(c, l));
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return types;
}

GenericSplit generic_splitting(CurveAnalyzer& c, const SampleConfig& cfg) {
  if (c.mdr() == 0) throw std::logic_error("generic_splitting: pencils are excluded");
  int d = c.degree();
  Int c2 = (Int(d) - 1) * (Int(d) - 1) - c.tau();
  Int prod = c2 - c.nu();
  Int sum = d - 1;
  Int disc = sum * sum - 4 * prod;
  if (disc < 0)
    throw InvariantError("generic_splitting: negative discriminant, no integral splitting");
  Int root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  if (root * root != disc || (sum - root) % 2 != 0)
    throw InvariantError("generic_splitting: (d-1)^2 - tau - nu is not a product of integers "
                         "summing to d-1");
  int d1 = static_cast<int>(to_long((sum - root) / 2));
  int d2 = static_cast<int>(to_long((sum + root) / 2));
  if (d1 < 0) throw InvariantError("generic_splitting: negative predicted d1");

  GenericSplit out;
  out.type = {d1, d2};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> coef(-cfg.coeff_box, cfg.coeff_box);
  while (out.valid_samples < cfg.max_valid && out.draws < cfg.max_draws) {
    ++out.draws;
    LinForm l{rat(coef(rng)), rat(coef(rng)), rat(coef(rng))};
    if (l.is_zero()) continue;
    if (restrict_to_line(c.poly(), l).is_zero()) continue;
    ++out.valid_samples;
    SplitType st = splitting_type(c, l);
    out.samples.emplace_back(st, l);
    if (st.d1 > d1)
      throw InvariantError("generic_splitting: sampled line has d1 = " + std::to_string(st.d1) +
                           " above the generic value " + std::to_string(d1));
    if (st.d1 == d1) {
      out.witness = l;
      return out;
    }
  }
  throw GenericityError("generic_splitting: no generic line found in " +
                        std::to_string(out.draws) + " draws with coefficients in [-" +
                        std::to_string(cfg.coeff_box) + ", " + std::to_string(cfg.coeff_box) +
                        "]; increase --coeff-box");
}

}  // namespace logsplit

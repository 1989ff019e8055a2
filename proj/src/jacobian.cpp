#include "logsplit/jacobian.hpp"

#include <stdexcept>

#include "logsplit/errors.hpp"

namespace logsplit {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

int shifted_index(const Mono& m, int var) {
  Mono t = m;
  t[var] += 1;
  return mono_index(t);
}

// {g in S_k : x*g, y*g, z*g all lie in `up`}, up a subspace of S_(k+1).
Subspace multiples_into(const Subspace& up, int k) {
  if (k < 0) return Subspace(0);
  int n = dim_forms(k);
  int amb_up = dim_forms(k + 1);
  auto basis = monomial_basis(k);
  QMatrix constraints(3 * amb_up, n);
  std::vector<Rat> unit(amb_up, Rat(0));
  for (int j = 0; j < n; ++j)
    for (int var = 0; var < 3; ++var) {
      int idx = shifted_index(basis[j], var);
      unit[idx] = 1;
      std::vector<Rat> res = up.residual(unit);
      unit[idx] = 0;
      for (int i = 0; i < amb_up; ++i)
        if (res[i] != 0) constraints.at(var * amb_up + i, j) = res[i];
    }
  return kernel_basis(constraints);
}

}  // namespace

std::string class_name(CurveClass c) {
  switch (c) {
    case CurveClass::Pencil: return "pencil";
    case CurveClass::Free: return "free";
    case CurveClass::NearlyFree: return "nearly_free";
    case CurveClass::Other: return "other";
  }
  return "other";
}

TauBounds tau_admissible_range(int d, int r) {
  if (d < 1 || r < 0) throw std::invalid_argument("tau_admissible_range: bad arguments");
  Int tmin = Int(d - 1) * Int(d - r - 1);
  Int tmax = tmin + Int(r) * Int(r) - binomial2(Int(2 * r + 2 - d));
  return {tmin, tmax};
}

CurveAnalyzer::CurveAnalyzer(HomPoly f) : f_(std::move(f)), d_(f_.deg) {
  if (f_.is_zero()) throw std::invalid_argument("CurveAnalyzer: zero polynomial");
  if (d_ < 1) throw std::invalid_argument("CurveAnalyzer: constant polynomial");
  for (int v = 0; v < 3; ++v) grad_[v] = partial(f_, v);
}

QMatrix CurveAnalyzer::gradient_matrix(int k) const {
  return hcat(hcat(mult_map(grad_[0], k), mult_map(grad_[1], k)), mult_map(grad_[2], k));
}

const Subspace& CurveAnalyzer::syzygies(int k) {
  auto it = syz_.find(k);
  if (it != syz_.end()) return it->second;
  Subspace s = k < 0 ? Subspace(0) : kernel_basis(gradient_matrix(k));
  syz_dim_[k] = s.dim();
  return syz_.emplace(k, std::move(s)).first->second;
}

int CurveAnalyzer::syzygy_dim(int k) {
  if (k < 0) return 0;
  if (auto it = syz_.find(k); it != syz_.end()) return it->second.dim();
  if (auto it = syz_dim_.find(k); it != syz_dim_.end()) return it->second;
  int dim = 3 * dim_forms(k) - rank(gradient_matrix(k));
  syz_dim_[k] = dim;
  return dim;
}

int CurveAnalyzer::mdr() {
  if (mdr_) return *mdr_;
  for (int k = 0; k <= d_ - 1; ++k)
    if (syzygy_dim(k) > 0) {
      mdr_ = k;
      return k;
    }
  throw InvariantError("no syzygy found up to degree d-1");
}

int CurveAnalyzer::jacobian_rank(int k) {
  int j = k - d_ + 1;
  if (j < 0 || k < 0) return 0;
  return 3 * dim_forms(j) - syzygy_dim(j);
}

int CurveAnalyzer::jacobian_hilbert(int k) {
  if (k < 0) return 0;
  return dim_forms(k) - jacobian_rank(k);
}

const Subspace& CurveAnalyzer::jacobian_piece(int k) {
  auto it = jac_.find(k);
  if (it != jac_.end()) return it->second;
  Subspace s(dim_forms(k));
  int j = k - d_ + 1;
  if (k >= 0 && j >= 0) s = Subspace::span_of_rows(transpose(gradient_matrix(j)));
  return jac_.emplace(k, std::move(s)).first->second;
}

Int CurveAnalyzer::tau() {
  if (tau_) return *tau_;
  int top = 3 * d_ - 3;
  int a = jacobian_hilbert(top - 2);
  int b = jacobian_hilbert(top - 1);
  int c = jacobian_hilbert(top);
  if (a != b || b != c)
    throw InvariantError("Jacobian cokernel dimension does not stabilize (" + std::to_string(a) +
                         ", " + std::to_string(b) + ", " + std::to_string(c) +
                         "); the curve is not reduced");
  tau_ = Int(c);
  return *tau_;
}

void CurveAnalyzer::check_saturation_root() {
  if (root_checked_) return;
  int r0 = 3 * d_ - 5;
  for (int k : {r0, r0 + 1}) {
    if (k < 0) continue;
    int quot = multiples_into(jacobian_piece(k + 1), k).dim();
    if (quot != jacobian_rank(k))
      throw InvariantError("saturation not stable at degree " + std::to_string(k) +
                           ": ideal quotient has dimension " + std::to_string(quot) +
                           ", ideal has " + std::to_string(jacobian_rank(k)));
  }
  root_checked_ = true;
}

const Subspace& CurveAnalyzer::saturated_piece(int k) {
  check_saturation_root();
  int r0 = 3 * d_ - 5;
  if (k >= r0 || k < 0) {
    auto it = sat_.find(k);
    if (it != sat_.end()) return it->second;
    return sat_.emplace(k, jacobian_piece(k)).first->second;
  }
  int known = k;
  while (known < r0 && !sat_.count(known)) ++known;
  for (int cur = known - 1; cur >= k; --cur)
    sat_.emplace(cur, multiples_into(saturated_piece(cur + 1), cur));
  return sat_.at(k);
}

int CurveAnalyzer::defect_dim(int k) {
  if (k < 0) return 0;
  return saturated_piece(k).dim() - jacobian_rank(k);
}

int CurveAnalyzer::nu() { return defect_dim(floor_div(3 * (d_ - 2), 2)); }

ChernPair CurveAnalyzer::chern() {
  Int c1 = -(Int(d_) - 1);
  Int c2 = (Int(d_) - 1) * (Int(d_) - 1) - tau();
  return {c1, c2};
}

CurveClass CurveAnalyzer::classify() {
  int r = mdr();
  Int dd = Int(d_) - 1;
  if (r == 0) {
    if (tau() != dd * dd)
      throw InvariantError("degree-zero syzygy but tau != (d-1)^2");
    return CurveClass::Pencil;
  }
  int v = nu();
  if (v == 0) {
    if (2 * r > d_ - 1) throw InvariantError("free curve with 2*mdr > d-1");
    if (tau() != dd * dd - Int(r) * Int(d_ - 1 - r))
      throw InvariantError("free curve fails tau = (d-1)^2 - d1*d2");
    return CurveClass::Free;
  }
  if (v == 1) {
    if (2 * r > d_) throw InvariantError("nearly free curve with 2*mdr > d");
    if (dd * dd - tau() != Int(r) * Int(d_ - r - 1) + 1)
      throw InvariantError("nearly free curve fails (d-1)^2 - tau = d1*(d2-1) + 1");
    return CurveClass::NearlyFree;
  }
  return CurveClass::Other;
}

ExponentPair CurveAnalyzer::exponents() {
  CurveClass c = classify();
  int r = mdr();
  switch (c) {
    case CurveClass::Pencil:
    case CurveClass::Free:
      return {r, d_ - 1 - r};
    case CurveClass::NearlyFree:
      return {r, d_ - r};
    case CurveClass::Other:
      throw std::logic_error("exponents: curve is neither free nor nearly free");
  }
  throw std::logic_error("exponents: unreachable");
}

std::vector<std::pair<int, int>> CurveAnalyzer::min_gen_degrees(int kmax) {
  if (kmax < 0) kmax = d_;
  std::vector<std::pair<int, int>> out;
  int start = mdr();
  for (int k = start; k <= kmax; ++k) {
    int total = syzygy_dim(k);
    if (total == 0) continue;
    int old_rank = 0;
    if (syzygy_dim(k - 1) > 0) {
      const Subspace& prev = syzygies(k - 1);
      int nk = dim_forms(k);
      int nk1 = dim_forms(k - 1);
      auto basis = monomial_basis(k - 1);
      QMatrix shifted(3 * prev.dim(), 3 * nk);
      for (int r = 0; r < prev.dim(); ++r)
        for (int var = 0; var < 3; ++var)
          for (int block = 0; block < 3; ++block)
            for (int i = 0; i < nk1; ++i) {
              const Rat& v = prev.basis().at(r, block * nk1 + i);
              if (v != 0)
                shifted.at(3 * r + var, block * nk + shifted_index(basis[i], var)) = v;
            }
      old_rank = rank(shifted);
    }
    int fresh = total - old_rank;
    if (fresh > 0) out.emplace_back(k, fresh);
  }
  return out;
}

}  // namespace logsplit

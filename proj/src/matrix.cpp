#include "logsplit/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace logsplit {

QMatrix hcat(const QMatrix& l, const QMatrix& r) {
  if (l.rows != r.rows) throw std::invalid_argument("hcat: row mismatch");
  QMatrix out(l.rows, l.cols + r.cols);
  for (int i = 0; i < l.rows; ++i) {
    for (int j = 0; j < l.cols; ++j) out.at(i, j) = l.at(i, j);
    for (int j = 0; j < r.cols; ++j) out.at(i, l.cols + j) = r.at(i, j);
  }
  return out;
}

QMatrix vcat(const QMatrix& top, const QMatrix& bot) {
  if (top.cols != bot.cols) throw std::invalid_argument("vcat: column mismatch");
  QMatrix out(top.rows + bot.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), out.a.begin());
  std::copy(bot.a.begin(), bot.a.end(), out.a.begin() + top.a.size());
  return out;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

std::vector<Rat> apply(const QMatrix& m, std::span<const Rat> v) {
  if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("apply: size mismatch");
  std::vector<Rat> out(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i) {
    Rat acc(0);
    const Rat* row = m.a.data() + static_cast<size_t>(i) * m.cols;
    for (int j = 0; j < m.cols; ++j)
      if (row[j] != 0 && v[j] != 0) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

/*
 * Exact elimination engine.
 *
 * Rows are scaled to primitive integer vectors. A pivot step replaces row r
 * by (p*r - q*pr)/content, which is integral by construction, so no rational
 * arithmetic happens until the final pivot normalization. Content removal
 * keeps entries about as small as classical fraction-free schemes do on the
 * sparse multiplication matrices seen here, and pivots are chosen
 * sparsest-row-first to limit fill-in.
 *
 * The whole elimination first runs over int64 with 128-bit intermediates and
 * restarts over arbitrary-precision integers on the first overflow. The
 * reduced echelon form is unique, so both paths produce identical results.
 */

using i64 = long long;
using i128 = __int128;
using u128 = unsigned __int128;

struct Overflow {};

u128 abs128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// ---- int64 backend -------------------------------------------------------

int nnz_of(const std::vector<i64>& r) {
  int n = 0;
  for (i64 v : r) n += (v != 0);
  return n;
}

bool is_zero(i64 v) { return v == 0; }

// -1/0/1 as |a| <=> |b|
int cmp_abs(i64 a, i64 b) {
  u128 x = abs128(a), y = abs128(b);
  return x < y ? -1 : (x > y ? 1 : 0);
}

// r <- (p*r - q*s)/content
void combine(std::vector<i64>& r, i64 p, i64 q, const std::vector<i64>& s,
             std::vector<i128>& scratch) {
  size_t n = r.size();
  scratch.resize(n);
  u128 g = 0;
  for (size_t i = 0; i < n; ++i) {
    i128 w = static_cast<i128>(p) * r[i] - static_cast<i128>(q) * s[i];
    scratch[i] = w;
    if (w != 0) {
      u128 a = abs128(w);
      g = g ? gcd128(g, a) : a;
    }
  }
  if (g == 0) {
    std::fill(r.begin(), r.end(), 0);
    return;
  }
  for (size_t i = 0; i < n; ++i) {
    i128 v = scratch[i] / static_cast<i128>(g);
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN)) throw Overflow{};
    r[i] = static_cast<i64>(v);
  }
}

void make_primitive(std::vector<i64>& r) {
  u128 g = 0;
  int lead = -1;
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) {
      if (lead < 0) lead = static_cast<int>(i);
      g = g ? gcd128(g, abs128(r[i])) : abs128(r[i]);
    }
  if (lead < 0) return;
  i64 d = static_cast<i64>(g);
  if (r[lead] < 0) d = -d;
  if (d != 1)
    for (auto& v : r) v /= d;
}

Rat rat_of(i64 v) { return Rat(static_cast<long>(v)); }

// ---- gmp backend ---------------------------------------------------------

int nnz_of(const std::vector<Int>& r) {
  int n = 0;
  for (const Int& v : r) n += (v != 0);
  return n;
}

bool is_zero(const Int& v) { return v == 0; }

int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// p and q are taken by value: callers pass entries of r, which this function
// overwrites as it runs.
void combine(std::vector<Int>& r, Int p, Int q, const std::vector<Int>& s,
             std::vector<Int>& scratch) {
  size_t n = r.size();
  (void)scratch;
  Int g = 0;
  for (size_t i = 0; i < n; ++i) {
    r[i] = p * r[i] - q * s[i];
    if (r[i] != 0) {
      if (g == 0)
        g = abs(r[i]);
      else
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
    }
  }
  if (g <= 1) return;
  for (size_t i = 0; i < n; ++i)
    if (r[i] != 0) mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
}

void make_primitive(std::vector<Int>& r) {
  Int g = 0;
  int lead = -1;
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) {
      if (lead < 0) lead = static_cast<int>(i);
      if (g == 0)
        g = abs(r[i]);
      else
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
    }
  if (lead < 0) return;
  if (r[lead] < 0) g = -g;
  if (g != 1 && g != 0)
    for (auto& v : r)
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

Rat rat_of(const Int& v) { return Rat(v); }

// ---- row loading ---------------------------------------------------------

// Integer row equal to the rational row times the lcm of its denominators.
std::vector<Int> cleared_row(const QMatrix& m, int i) {
  std::vector<Int> out(m.cols);
  Int l(1);
  for (int j = 0; j < m.cols; ++j) {
    const Rat& q = m.at(i, j);
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  for (int j = 0; j < m.cols; ++j) {
    const Rat& q = m.at(i, j);
    if (q != 0) out[j] = q.get_num() * (l / q.get_den());
  }
  return out;
}

bool load_rows(const QMatrix& m, std::vector<std::vector<i64>>& rows) {
  rows.assign(m.rows, {});
  for (int i = 0; i < m.rows; ++i) {
    std::vector<Int> big = cleared_row(m, i);
    std::vector<i64> small(big.size());
    for (size_t j = 0; j < big.size(); ++j) {
      if (!big[j].fits_slong_p()) return false;
      small[j] = big[j].get_si();
    }
    make_primitive(small);
    rows[i] = std::move(small);
  }
  return true;
}

bool load_rows(const QMatrix& m, std::vector<std::vector<Int>>& rows) {
  rows.assign(m.rows, {});
  for (int i = 0; i < m.rows; ++i) {
    rows[i] = cleared_row(m, i);
    make_primitive(rows[i]);
  }
  return true;
}

// ---- elimination ---------------------------------------------------------

template <class V>
struct ElimState {
  std::vector<std::vector<V>> rows;
  std::vector<int> nnz;
  std::vector<char> used;
  std::vector<int> pivot_rows;  // in pivot-column order
  std::vector<int> pivot_cols;
  int cols = 0;
};

template <class V>
void forward_eliminate(ElimState<V>& st) {
  int n = static_cast<int>(st.rows.size());
  st.nnz.resize(n);
  for (int i = 0; i < n; ++i) st.nnz[i] = nnz_of(st.rows[i]);
  st.used.assign(n, 0);
  std::vector<typename std::conditional<std::is_same<V, i64>::value, i128, Int>::type> scratch;
  for (int j = 0; j < st.cols; ++j) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (st.used[i] || is_zero(st.rows[i][j])) continue;
      if (best < 0 || st.nnz[i] < st.nnz[best] ||
          (st.nnz[i] == st.nnz[best] && cmp_abs(st.rows[i][j], st.rows[best][j]) < 0)) {
        best = i;
      }
    }
    if (best < 0) continue;
    st.used[best] = 1;
    st.pivot_rows.push_back(best);
    st.pivot_cols.push_back(j);
    for (int i = 0; i < n; ++i) {
      if (st.used[i] || is_zero(st.rows[i][j])) continue;
      combine(st.rows[i], st.rows[best][j], st.rows[i][j], st.rows[best], scratch);
      st.nnz[i] = nnz_of(st.rows[i]);
    }
  }
}

template <class V>
void back_eliminate(ElimState<V>& st) {
  std::vector<typename std::conditional<std::is_same<V, i64>::value, i128, Int>::type> scratch;
  int r = static_cast<int>(st.pivot_rows.size());
  for (int p = r - 1; p >= 0; --p) {
    int row = st.pivot_rows[p];
    int col = st.pivot_cols[p];
    for (int k = 0; k < p; ++k) {
      int other = st.pivot_rows[k];
      if (is_zero(st.rows[other][col])) continue;
      combine(st.rows[other], st.rows[row][col], st.rows[other][col], st.rows[row], scratch);
    }
  }
}

template <class V>
Echelon finish_rref(ElimState<V>& st) {
  Echelon e;
  int r = static_cast<int>(st.pivot_rows.size());
  e.rref = QMatrix(r, st.cols);
  e.pivot_cols = st.pivot_cols;
  for (int p = 0; p < r; ++p) {
    const auto& row = st.rows[st.pivot_rows[p]];
    Rat pivot = rat_of(row[st.pivot_cols[p]]);
    for (int j = 0; j < st.cols; ++j)
      if (!is_zero(row[j])) e.rref.at(p, j) = rat_of(row[j]) / pivot;
  }
  return e;
}

template <class V>
bool try_eliminate(const QMatrix& m, bool full, Echelon& out, int& out_rank) {
  ElimState<V> st;
  st.cols = m.cols;
  if (!load_rows(m, st.rows)) return false;
  try {
    forward_eliminate(st);
    if (!full) {
      out_rank = static_cast<int>(st.pivot_rows.size());
      return true;
    }
    back_eliminate(st);
  } catch (const Overflow&) {
    return false;
  }
  out = finish_rref(st);
  out_rank = static_cast<int>(st.pivot_rows.size());
  return true;
}

Echelon rref_of(const QMatrix& m, bool full, int& rank_out) {
  Echelon e;
  e.rref.cols = m.cols;
  if (m.rows == 0 || m.cols == 0) {
    rank_out = 0;
    return e;
  }
  if (try_eliminate<i64>(m, full, e, rank_out)) return e;
  if (!try_eliminate<Int>(m, full, e, rank_out))
    throw std::logic_error("elimination failed in exact mode");
  return e;
}

}  // namespace

int rank(const QMatrix& m) {
  int r = 0;
  rref_of(m, false, r);
  return r;
}

Echelon reduced_echelon(const QMatrix& m) {
  int r = 0;
  return rref_of(m, true, r);
}

Subspace Subspace::span_of_rows(const QMatrix& rows) {
  Subspace s(rows.cols);
  Echelon e = reduced_echelon(rows);
  s.basis_ = std::move(e.rref);
  s.pivots_ = std::move(e.pivot_cols);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = QMatrix(ambient_dim, ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    s.basis_.at(i, i) = 1;
    s.pivots_[i] = i;
  }
  return s;
}

std::vector<Rat> Subspace::residual(std::span<const Rat> v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("residual: vector has wrong length");
  std::vector<Rat> r(v.begin(), v.end());
  for (int i = 0; i < basis_.rows; ++i) {
    Rat c = r[pivots_[i]];
    if (c == 0) continue;
    const Rat* row = basis_.a.data() + static_cast<size_t>(i) * ambient_;
    for (int j = 0; j < ambient_; ++j)
      if (row[j] != 0) r[j] -= c * row[j];
  }
  return r;
}

bool Subspace::contains_vector(std::span<const Rat> v) const {
  auto r = residual(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& q) { return q == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  for (int i = 0; i < other.basis_.rows; ++i)
    if (!contains_vector(other.basis_.row(i))) return false;
  return true;
}

std::vector<Rat> Subspace::from_coords(std::span<const Rat> coords) const {
  if (static_cast<int>(coords.size()) != dim())
    throw std::invalid_argument("from_coords: wrong length");
  std::vector<Rat> v(ambient_, Rat(0));
  for (int i = 0; i < basis_.rows; ++i) {
    if (coords[i] == 0) continue;
    const Rat* row = basis_.a.data() + static_cast<size_t>(i) * ambient_;
    for (int j = 0; j < ambient_; ++j)
      if (row[j] != 0) v[j] += coords[i] * row[j];
  }
  return v;
}

Subspace kernel_basis(const QMatrix& m) {
  Echelon e = reduced_echelon(m);
  int r = static_cast<int>(e.pivot_cols.size());
  int k = m.cols - r;
  QMatrix rows(k, m.cols);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : e.pivot_cols) is_pivot[c] = 1;
  int idx = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    rows.at(idx, j) = 1;
    for (int i = 0; i < r; ++i)
      if (e.rref.at(i, j) != 0) rows.at(idx, e.pivot_cols[i]) = -e.rref.at(i, j);
    ++idx;
  }
  return Subspace::span_of_rows(rows);
}

bool membership(std::span<const Rat> v, const Subspace& w) { return w.contains_vector(v); }

int induced_kernel_dim(const QMatrix& m, const Subspace& dom_sub, const Subspace& dom_quot_by,
                       const Subspace& cod_sub, const Subspace& cod_quot_by) {
  if (dom_sub.ambient() != m.cols || dom_quot_by.ambient() != m.cols)
    throw std::invalid_argument("induced_kernel_dim: domain ambient mismatch");
  if (cod_sub.ambient() != m.rows || cod_quot_by.ambient() != m.rows)
    throw std::invalid_argument("induced_kernel_dim: codomain ambient mismatch");
  if (!dom_sub.contains(dom_quot_by))
    throw std::invalid_argument("induced_kernel_dim: dom_quot_by not inside dom_sub");
  if (!cod_sub.contains(cod_quot_by))
    throw std::invalid_argument("induced_kernel_dim: cod_quot_by not inside cod_sub");

  QMatrix constraints(m.rows, dom_sub.dim());
  for (int i = 0; i < dom_sub.dim(); ++i) {
    auto image = apply(m, dom_sub.basis().row(i));
    if (!cod_sub.contains_vector(image))
      throw std::invalid_argument("induced_kernel_dim: map does not send dom_sub into cod_sub");
    auto res = cod_quot_by.residual(image);
    for (int r = 0; r < m.rows; ++r) constraints.at(r, i) = std::move(res[r]);
  }
  for (int i = 0; i < dom_quot_by.dim(); ++i) {
    auto image = apply(m, dom_quot_by.basis().row(i));
    if (!cod_quot_by.contains_vector(image))
      throw std::invalid_argument(
          "induced_kernel_dim: map does not send dom_quot_by into cod_quot_by");
  }
  int preimage_dim = dom_sub.dim() - rank(constraints);
  return preimage_dim - dom_quot_by.dim();
}

}  // namespace logsplit

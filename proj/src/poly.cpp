#include "logsplit/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "logsplit/errors.hpp"

namespace logsplit {

int dim_forms(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

std::vector<Mono> monomial_basis(int k) {
  std::vector<Mono> out;
  if (k < 0) return out;
  out.reserve(dim_forms(k));
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  return out;
}

int mono_index(const Mono& m) {
  int k = m[0] + m[1] + m[2];
  int block = k - m[0];
  return block * (block + 1) / 2 + (block - m[1]);
}

HomPoly hp_zero(int deg) {
  HomPoly f;
  f.deg = deg;
  return f;
}

HomPoly hp_mono(const Mono& m, const Rat& c) {
  HomPoly f;
  f.deg = m[0] + m[1] + m[2];
  if (c != 0) f.terms[m] = c;
  return f;
}

HomPoly hp_add(const HomPoly& f, const HomPoly& g) {
  if (f.deg != g.deg && !f.is_zero() && !g.is_zero())
    throw std::invalid_argument("hp_add: degree mismatch");
  HomPoly out = f;
  out.deg = f.is_zero() ? g.deg : f.deg;
  for (const auto& [m, c] : g.terms) {
    Rat v = out.terms.count(m) ? out.terms[m] + c : c;
    if (v == 0)
      out.terms.erase(m);
    else
      out.terms[m] = v;
  }
  return out;
}

HomPoly hp_scale(const HomPoly& f, const Rat& c) {
  HomPoly out;
  out.deg = f.deg;
  if (c == 0) return out;
  for (const auto& [m, v] : f.terms) out.terms[m] = v * c;
  return out;
}

HomPoly hp_mul(const HomPoly& f, const HomPoly& g) {
  HomPoly out;
  out.deg = f.deg + g.deg;
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms) {
      Mono m{mf[0] + mg[0], mf[1] + mg[1], mf[2] + mg[2]};
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        out.terms.emplace(m, cf * cg);
      } else {
        it->second += cf * cg;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

HomPoly partial(const HomPoly& f, int var) {
  if (var < 0 || var > 2) throw std::invalid_argument("partial: bad variable");
  HomPoly out;
  out.deg = f.deg - 1;
  for (const auto& [m, c] : f.terms) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    out.terms[d] = c * m[var];
  }
  return out;
}

Rat evaluate(const HomPoly& f, const std::array<Rat, 3>& p) {
  Rat acc(0);
  for (const auto& [m, c] : f.terms) {
    Rat t = c;
    for (int v = 0; v < 3; ++v)
      for (int e = 0; e < m[v]; ++e) t *= p[v];
    acc += t;
  }
  return acc;
}

std::vector<Rat> coeff_vector(const HomPoly& f) {
  std::vector<Rat> out(dim_forms(f.deg), Rat(0));
  for (const auto& [m, c] : f.terms) out[mono_index(m)] = c;
  return out;
}

HomPoly from_coeff_vector(int deg, std::span<const Rat> v) {
  if (static_cast<int>(v.size()) != dim_forms(deg))
    throw std::invalid_argument("from_coeff_vector: wrong length");
  HomPoly f;
  f.deg = deg;
  auto basis = monomial_basis(deg);
  for (size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) f.terms[basis[i]] = v[i];
  return f;
}

std::string to_string(const HomPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms) {
    Rat v = c;
    if (first) {
      if (v < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    }
    first = false;
    std::string mono;
    const char* names[3] = {"x", "y", "z"};
    for (int var = 0; var < 3; ++var) {
      if (m[var] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[var];
      if (m[var] > 1) mono += "^" + std::to_string(m[var]);
    }
    if (mono.empty()) {
      out += rat_to_string(v);
    } else if (v == 1) {
      out += mono;
    } else {
      out += rat_to_string(v) + "*" + mono;
    }
  }
  return out;
}

QMatrix mult_map(const HomPoly& g, int k) {
  QMatrix m(dim_forms(k + g.deg), dim_forms(k));
  if (k < 0) return m;
  auto basis = monomial_basis(k);
  for (size_t j = 0; j < basis.size(); ++j)
    for (const auto& [mg, c] : g.terms) {
      Mono t{basis[j][0] + mg[0], basis[j][1] + mg[1], basis[j][2] + mg[2]};
      m.at(mono_index(t), static_cast<int>(j)) = c;
    }
  return m;
}

HomPoly change_coords(const HomPoly& f, const QMatrix& m) {
  if (m.rows != 3 || m.cols != 3) throw std::invalid_argument("change_coords: need 3x3 matrix");
  if (rank(m) != 3) throw std::invalid_argument("change_coords: matrix not invertible");
  HomPoly rows[3];
  for (int i = 0; i < 3; ++i) {
    rows[i] = hp_zero(1);
    for (int j = 0; j < 3; ++j) {
      Mono mo{0, 0, 0};
      mo[j] = 1;
      if (m.at(i, j) != 0) rows[i].terms[mo] = m.at(i, j);
    }
  }
  // Cache powers of each substituted linear form.
  std::array<std::vector<HomPoly>, 3> pow;
  for (int v = 0; v < 3; ++v) pow[v].push_back(hp_mono({0, 0, 0}, 1));
  auto power = [&](int v, int e) -> const HomPoly& {
    while (static_cast<int>(pow[v].size()) <= e) pow[v].push_back(hp_mul(pow[v].back(), rows[v]));
    return pow[v][e];
  };
  HomPoly out = hp_zero(f.deg);
  for (const auto& [mo, c] : f.terms) {
    HomPoly t = hp_scale(power(0, mo[0]), c);
    t = hp_mul(t, power(1, mo[1]));
    t = hp_mul(t, power(2, mo[2]));
    out = hp_add(out, t);
  }
  out.deg = f.deg;
  return out;
}

HomPoly LinForm::to_poly() const {
  HomPoly f = hp_zero(1);
  if (a != 0) f.terms[{1, 0, 0}] = a;
  if (b != 0) f.terms[{0, 1, 0}] = b;
  if (c != 0) f.terms[{0, 0, 1}] = c;
  return f;
}

std::array<Int, 3> canonical_triple(const std::array<Rat, 3>& q) {
  Int l(1);
  for (const Rat& v : q)
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::array<Int, 3> w{};
  for (int i = 0; i < 3; ++i)
    if (q[i] != 0) w[i] = q[i].get_num() * (l / q[i].get_den());
  Int g(0);
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (w[i] != 0) {
      if (lead < 0) lead = i;
      if (g == 0)
        g = abs(w[i]);
      else
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
  if (lead < 0) return w;
  if (w[lead] < 0) g = -g;
  for (int i = 0; i < 3; ++i)
    if (w[i] != 0) mpz_divexact(w[i].get_mpz_t(), w[i].get_mpz_t(), g.get_mpz_t());
  return w;
}

std::array<Int, 3> LinForm::canonical() const { return canonical_triple({a, b, c}); }

std::string LinForm::to_string() const {
  auto w = canonical();
  std::string out;
  const char* names[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    if (w[i] == 0) continue;
    if (out.empty()) {
      if (w[i] < 0) out += "-";
    } else {
      out += w[i] < 0 ? " - " : " + ";
    }
    Int v = abs(w[i]);
    if (v != 1) out += v.get_str() + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

bool BinForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& q) { return q == 0; });
}

BinForm bin_partial(const BinForm& b, int var) {
  if (b.deg == 0) return BinForm(0);
  BinForm out(b.deg - 1);
  for (int i = 0; i <= b.deg; ++i) {
    if (b.c[i] == 0) continue;
    if (var == 0 && b.deg - i > 0) out.c[i] += b.c[i] * (b.deg - i);
    if (var == 1 && i > 0) out.c[i - 1] += b.c[i] * i;
  }
  return out;
}

namespace {

// Dense univariate polynomials over Q, coefficient of u^i at position i.
using UPoly = std::vector<Rat>;

void u_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly u_deriv(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  u_trim(d);
  return d;
}

UPoly u_mod(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    u_trim(a);
  }
  return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
  u_trim(a);
  u_trim(b);
  while (!b.empty()) {
    UPoly r = u_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

bool bin_squarefree(const BinForm& b) {
  if (b.is_zero()) return false;
  if (b.deg == 0) return true;
  int t_mult = 0;
  while (b.c[t_mult] == 0) ++t_mult;
  if (t_mult > 1) return false;
  // Dehomogenize at t = 1; remaining roots (including u = 0) are checked by
  // the univariate squarefree test.
  UPoly q(b.deg + 1, Rat(0));
  for (int i = 0; i <= b.deg; ++i) q[b.deg - i] = b.c[i];
  u_trim(q);
  if (q.size() <= 1) return true;
  return u_gcd(q, u_deriv(q)).size() == 1;
}

std::array<std::array<Rat, 3>, 2> line_points(const LinForm& l) {
  if (l.is_zero()) throw std::invalid_argument("line_points: zero form");
  QMatrix row(1, 3);
  row.at(0, 0) = l.a;
  row.at(0, 1) = l.b;
  row.at(0, 2) = l.c;
  Subspace k = kernel_basis(row);
  std::array<std::array<Rat, 3>, 2> pts;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) pts[i][j] = k.basis().at(i, j);
  return pts;
}

namespace {

// Binary polynomials as coefficient vectors, c[i] = coeff of s^(n-i) t^i.
std::vector<Rat> bin_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

BinForm bin_mul(const BinForm& a, const BinForm& b) {
  BinForm out(a.deg + b.deg);
  out.c = bin_mul(a.c, b.c);
  return out;
}

BinForm bin_subst(const BinForm& b, const std::array<std::array<Rat, 2>, 2>& w) {
  BinForm out(b.deg);
  std::vector<std::vector<Rat>> pow_u{{Rat(1)}}, pow_v{{Rat(1)}};
  auto power = [](std::vector<std::vector<Rat>>& cache, const std::vector<Rat>& lin,
                  int e) -> const std::vector<Rat>& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(bin_mul(cache.back(), lin));
    return cache[e];
  };
  std::vector<Rat> lu{w[0][0], w[0][1]}, lv{w[1][0], w[1][1]};
  for (int i = 0; i <= b.deg; ++i) {
    if (b.c[i] == 0) continue;
    std::vector<Rat> t = bin_mul(power(pow_u, lu, b.deg - i), power(pow_v, lv, i));
    for (size_t j = 0; j < t.size(); ++j)
      if (t[j] != 0) out.c[j] += b.c[i] * t[j];
  }
  return out;
}

BinForm restrict_to_line(const HomPoly& f, const LinForm& l) {
  auto pts = line_points(l);
  // Powers of the two-term substitutions for each variable.
  std::array<std::vector<std::vector<Rat>>, 3> pow;
  for (int v = 0; v < 3; ++v) pow[v].push_back({Rat(1)});
  auto power = [&](int v, int e) -> const std::vector<Rat>& {
    while (static_cast<int>(pow[v].size()) <= e)
      pow[v].push_back(bin_mul(pow[v].back(), {pts[0][v], pts[1][v]}));
    return pow[v][e];
  };
  BinForm out(f.deg);
  for (const auto& [m, c] : f.terms) {
    std::vector<Rat> t = power(0, m[0]);
    t = bin_mul(t, power(1, m[1]));
    t = bin_mul(t, power(2, m[2]));
    for (size_t i = 0; i < t.size(); ++i)
      if (t[i] != 0) out.c[i] += c * t[i];
  }
  return out;
}

ReducedWitness squarefree_witness(const HomPoly& f, unsigned long seed, int trials) {
  ReducedWitness w;
  if (f.is_zero()) return w;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-97, 97);
  // A squarefree restriction certifies that f has no repeated factor: a
  // repeated factor of f restricts to a repeated factor (or kills the
  // restriction outright) on every line. Several lines are tried because a
  // single unlucky line through a singular point shows a false double root.
  while (w.trials < trials) {
    LinForm l{rat(coef(rng)), rat(coef(rng)), rat(coef(rng))};
    if (l.is_zero()) continue;
    ++w.trials;
    if (bin_squarefree(restrict_to_line(f, l))) {
      w.passed = true;
      return w;
    }
  }
  return w;
}

}  // namespace logsplit

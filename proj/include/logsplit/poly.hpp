#pragma once
#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "logsplit/matrix.hpp"
#include "logsplit/numeric.hpp"

namespace logsplit {

// Exponent triple (x, y, z). Monomials of a fixed total degree are ordered
// descending-lexicographically, which matches graded lex with x > y > z.
using Mono = std::array<int, 3>;

int dim_forms(int k);                         // dim of the degree-k graded piece, 0 for k < 0
std::vector<Mono> monomial_basis(int k);      // canonical order
int mono_index(const Mono& m);                // position within monomial_basis(|m|)

// Homogeneous polynomial in Q[x,y,z]. `deg` is the declared degree; the zero
// polynomial keeps its declared degree with an empty term map.
struct HomPoly {
  int deg = 0;
  std::map<Mono, Rat, std::greater<Mono>> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const HomPoly&) const = default;
};

HomPoly hp_zero(int deg);
HomPoly hp_mono(const Mono& m, const Rat& c);
HomPoly hp_add(const HomPoly& f, const HomPoly& g);
HomPoly hp_scale(const HomPoly& f, const Rat& c);
HomPoly hp_mul(const HomPoly& f, const HomPoly& g);
HomPoly partial(const HomPoly& f, int var);  // var: 0 = x, 1 = y, 2 = z
Rat evaluate(const HomPoly& f, const std::array<Rat, 3>& p);
std::vector<Rat> coeff_vector(const HomPoly& f);                // in monomial_basis order
HomPoly from_coeff_vector(int deg, std::span<const Rat> v);
std::string to_string(const HomPoly& f);  // re-parseable canonical form

// Matrix of multiplication by g from degree-k forms to degree-(k+deg g) forms,
// in monomial_basis coordinates.
QMatrix mult_map(const HomPoly& g, int k);

// f(M*p) for invertible M; a graded ring automorphism.
HomPoly change_coords(const HomPoly& f, const QMatrix& m);

// Line ax + by + cz = 0.
struct LinForm {
  Rat a, b, c;

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  HomPoly to_poly() const;
  std::array<Rat, 3> coeffs() const { return {a, b, c}; }
  // Scaled to coprime integers with positive leading entry; equal lines in
  // P^2 get equal triples.
  std::array<Int, 3> canonical() const;
  bool same_line(const LinForm& o) const { return canonical() == o.canonical(); }
  std::string to_string() const;
};

// Binary form of degree deg in (s, t); c[i] is the coefficient of s^(deg-i) t^i.
struct BinForm {
  int deg = 0;
  std::vector<Rat> c;

  BinForm() : c(1, Rat(0)) {}
  explicit BinForm(int d) : deg(d), c(d + 1, Rat(0)) {}
  bool is_zero() const;
  bool operator==(const BinForm&) const = default;
};

BinForm bin_partial(const BinForm& b, int var);  // 0 = s, 1 = t
bool bin_squarefree(const BinForm& b);
BinForm bin_mul(const BinForm& a, const BinForm& b);
// b(w[0][0]*s + w[0][1]*t, w[1][0]*s + w[1][1]*t)
BinForm bin_subst(const BinForm& b, const std::array<std::array<Rat, 2>, 2>& w);

// Coprime integer representative of a projective point or line given by a
// rational triple; first nonzero entry positive. Equal points get equal triples.
std::array<Int, 3> canonical_triple(const std::array<Rat, 3>& q);

// The two canonical points spanning the line L (rows of the reduced-echelon
// kernel basis of its coefficient row).
std::array<std::array<Rat, 3>, 2> line_points(const LinForm& l);

// f restricted to L through the canonical parametrization; zero iff L divides f.
BinForm restrict_to_line(const HomPoly& f, const LinForm& l);

// Probabilistic reducedness certificate. A repeated factor of f survives
// restriction to every line, so a single squarefree restriction proves f
// reduced; up to `trials` random lines are drawn before giving up.
struct ReducedWitness {
  bool passed = false;
  bool exact = false;  // set when reducedness was established exactly
  int trials = 0;
};

ReducedWitness squarefree_witness(const HomPoly& f, unsigned long seed, int trials = 5);

}  // namespace logsplit

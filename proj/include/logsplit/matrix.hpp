#pragma once
#include <span>
#include <vector>

#include "logsplit/numeric.hpp"

namespace logsplit {

// Dense matrix over Q, row-major.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  std::span<const Rat> row(int r) const {
    return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }
  bool operator==(const QMatrix&) const = default;
};

QMatrix hcat(const QMatrix& l, const QMatrix& r);
QMatrix vcat(const QMatrix& top, const QMatrix& bot);
QMatrix transpose(const QMatrix& m);
std::vector<Rat> apply(const QMatrix& m, std::span<const Rat> v);

struct Echelon {
  QMatrix rref;                 // rank x cols, unit pivots, pivot columns cleared
  std::vector<int> pivot_cols;  // strictly increasing, lexicographically least
};

int rank(const QMatrix& m);
Echelon reduced_echelon(const QMatrix& m);

// Linear subspace of Q^n held as its (unique) reduced-echelon basis, so
// equal subspaces compare equal and all outputs are order-independent.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) { basis_.cols = ambient_dim; }
  static Subspace span_of_rows(const QMatrix& rows);
  static Subspace full(int ambient_dim);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const QMatrix& basis() const { return basis_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }

  // v minus its projection onto the span; zero exactly for members.
  std::vector<Rat> residual(std::span<const Rat> v) const;
  bool contains_vector(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;
  std::vector<Rat> from_coords(std::span<const Rat> coords) const;

  bool operator==(const Subspace&) const = default;

 private:
  int ambient_ = 0;
  QMatrix basis_;
  std::vector<int> pivots_;
};

Subspace kernel_basis(const QMatrix& m);
bool membership(std::span<const Rat> v, const Subspace& w);

// Dimension of the kernel of the map (dom_sub/dom_quot_by) -> (cod_sub/cod_quot_by)
// induced by the ambient linear map m. Preconditions (checked): quot spaces are
// contained in their sub spaces, m maps dom_sub into cod_sub and dom_quot_by
// into cod_quot_by.
int induced_kernel_dim(const QMatrix& m, const Subspace& dom_sub, const Subspace& dom_quot_by,
                       const Subspace& cod_sub, const Subspace& cod_quot_by);

}  // namespace logsplit

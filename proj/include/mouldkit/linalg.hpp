#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mouldkit/rational.hpp"

namespace mouldkit {

using Vector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector apply(const Vector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// A basis of a linear subspace of Q^n. `labels` names the ambient coordinates
// when known; `weight` is the grading degree of the component it describes.
struct SubspaceBasis {
  int weight = 0;
  std::size_t ambient_dim = 0;
  std::vector<std::string> labels;
  std::vector<Vector> basis;

  std::size_t dimension() const { return basis.size(); }
};

// Incrementally maintained reduced row echelon form. Rows can be streamed in
// one at a time, so large constraint systems never need to be materialized.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  // Returns true when the row was independent of the rows seen so far.
  bool add_row(Vector row);
  // Reduces v against the current rows (in place copy).
  Vector reduce(Vector v) const;
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Kernel basis: one vector per non-pivot column, in column order, scaled to
  // primitive integers with a positive free coordinate.
  std::vector<Vector> nullspace() const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;          // sorted by pivot
  std::vector<std::size_t> pivots_;   // ascending
};

SubspaceBasis nullspace(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
// A particular solution of a x = b (free variables set to 0), or nullopt.
std::optional<Vector> solve(const RatMatrix& a, const Vector& b);

// Scales v by a positive rational so its entries are coprime integers.
Vector primitive(Vector v);

// Row echelon reduction of a list of vectors; returns the nonzero rows in
// reduced form, each made primitive. Used to canonicalize spans.
std::vector<Vector> canonical_span(const std::vector<Vector>& vs, std::size_t dim);

}  // namespace mouldkit

#include "mouldkit/linalg.hpp"

#include <algorithm>

namespace mouldkit {

Vector RatMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector RatMatrix::apply(const Vector& v) const {
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

Vector RowEchelon::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (sgn(f) == 0) continue;
    const Vector& r = rows_[k];
    for (std::size_t j = pivots_[k]; j < cols_; ++j)
      if (sgn(r[j]) != 0) v[j] -= f * r[j];
  }
  return v;
}

bool RowEchelon::add_row(Vector row) {
  row.resize(cols_);
  row = reduce(std::move(row));
  auto it = std::find_if(row.begin(), row.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (it == row.end()) return false;
  std::size_t p = static_cast<std::size_t>(it - row.begin());
  const Rational inv = Rational(1) / row[p];
  for (std::size_t j = p; j < cols_; ++j) row[j] *= inv;
  // Keep the form fully reduced: clear column p in existing rows.
  for (auto& r : rows_) {
    const Rational f = r[p];
    if (sgn(f) == 0) continue;
    for (std::size_t j = p; j < cols_; ++j)
      if (sgn(row[j]) != 0) r[j] -= f * row[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

std::vector<Vector> RowEchelon::nullspace() const {
  std::vector<Vector> out;
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = -rows_[k][free];
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

Vector primitive(Vector v) {
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : v) {
    if (sgn(c) == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (auto& c : v) c *= scale;
  return v;
}

SubspaceBasis nullspace(const RatMatrix& a) {
  RowEchelon ech(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) ech.add_row(a.row(i));
  SubspaceBasis b;
  b.ambient_dim = a.cols();
  b.basis = ech.nullspace();
  return b;
}

std::size_t rank(const RatMatrix& a) {
  RowEchelon ech(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) ech.add_row(a.row(i));
  return ech.rank();
}

std::optional<Vector> solve(const RatMatrix& a, const Vector& b) {
  const std::size_t n = a.cols();
  RowEchelon ech(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    r.push_back(b.at(i));
    ech.add_row(std::move(r));
  }
  Vector x(n);
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    std::size_t p = ech.pivots()[k];
    if (p == n) return std::nullopt;
    x[p] = ech.rows()[k][n];
  }
  return x;
}

std::vector<Vector> canonical_span(const std::vector<Vector>& vs, std::size_t dim) {
  RowEchelon ech(dim);
  for (const auto& v : vs) ech.add_row(v);
  std::vector<Vector> out;
  for (const auto& r : ech.rows()) out.push_back(primitive(r));
  return out;
}

}  // namespace mouldkit

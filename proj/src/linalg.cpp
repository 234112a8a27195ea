#include "bihom/linalg.hpp"

#include <cassert>

namespace bihom {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

Vector& axpy(Vector& y, const Scalar& c, const Vector& x) {
  if (y.size() != x.size()) throw DimensionMismatch("vector sizes differ");
  if (c.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
  return y;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

// ------------------------------------------------------------------ Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector r(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, k).is_zero()) r[i] += (*this)(i, k) * v[k];
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.data_) s *= c;
  return r;
}

Matrix Matrix::stack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("stacked blocks differ in width");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + at * cols);
    at += b.rows();
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

// -------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.form;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(lead, c));
    Scalar inv = a(lead, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(lead, c).is_zero()) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(lead, c).is_zero()) a(r, c) -= f * a(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw Singular();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.form(k, free);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vecs);
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(vectors, ambient));
  Matrix b(r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j) b(i, j) = r.form(i, j);
  s.basis_ = std::move(b);
  return s;
}

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
  return out;
}

void Subspace::check_ambient(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw AmbientMismatch(ambient_, other.ambient_);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw AmbientMismatch(ambient_, v.size());
  // Reduce v against the RREF rows: pivot of row i is its first nonzero entry.
  Vector w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (basis_(i, p).is_zero()) ++p;
    if (!w[p].is_zero()) {
      Scalar f = w[p];
      axpy(w, -f, basis_.row(i));
    }
  }
  return bihom::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  check_ambient(other);
  auto vecs = vectors();
  for (auto& v : other.vectors()) vecs.push_back(std::move(v));
  return span(ambient_, vecs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other);
  // Zassenhaus: rows [a | a] and [b | 0]; the RREF rows with zero left half
  // span the intersection in their right half.
  const std::size_t n = ambient_;
  std::vector<Vector> rows;
  for (const auto& a : vectors()) {
    Vector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) r[j] = r[n + j] = a[j];
    rows.push_back(std::move(r));
  }
  for (const auto& b : other.vectors()) {
    Vector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) r[j] = b[j];
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return Subspace(n);
  RrefResult r = rref(Matrix::from_rows(rows, 2 * n));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] < n) continue;
    Vector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = r.form(i, n + j);
    out.push_back(std::move(v));
  }
  return span(n, out);
}

bool Subspace::operator==(const Subspace& other) const { return ambient_ == other.ambient_ && basis_ == other.basis_; }

Matrix Subspace::annihilator() const {
  if (dim() == 0) return Matrix::identity(ambient_);
  Subspace k = kernel(basis_);
  return k.basis_.rows() == 0 ? Matrix(0, ambient_) : k.basis_;
}

std::string format_vector(const Vector& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    bool negative = !c.empty() && c[0] == '-';
    bool compound = v[i].numerator().terms().size() > 1 && v[i].denominator().is_constant() &&
                    v[i].denominator().constant_value() == 1;
    std::string mag = negative && !compound ? c.substr(1) : c;
    if (compound) mag = "(" + c + ")";
    if (s.empty()) {
      if (negative && !compound) s += "-";
    } else {
      s += negative && !compound ? " - " : " + ";
    }
    if (mag == "1") {
      s += names.at(i);
    } else {
      s += mag + "*" + names.at(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string format_subspace(const Subspace& s, const std::vector<std::string>& names) {
  if (s.is_zero()) return "0";
  std::string out = "span(";
  bool first = true;
  for (const auto& v : s.vectors()) {
    if (!first) out += ", ";
    out += format_vector(v, names);
    first = false;
  }
  return out + ")";
}

}  // namespace bihom

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
Vector& axpy(Vector& y, const Scalar& c, const Vector& x);  // y += c x
/// Tensor product coordinates: index (i, j) -> i * b.size() + j.
Vector kron(const Vector& a, const Vector& b);

/// Dense row-major matrix of Scalars acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const = default;

  /// Vertical concatenation.
  static Matrix stack(const std::vector<Matrix>& blocks);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q(parameters).
RrefResult rref(const Matrix& m);

/// Throws Singular when m has no inverse and DimensionMismatch when m is
/// not square.
Matrix invert(const Matrix& m);

class Subspace;

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// A subspace of Q(parameters)^n stored as its RREF basis; two subspaces
/// are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> vectors() const;
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  /// Rows span the annihilator: v lies in the subspace iff
  /// annihilator() * v = 0.
  Matrix annihilator() const;

 private:
  void check_ambient(const Subspace& other) const;

  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// Human-readable "span(x1 + 2*x3, x2)" with named coordinates.
std::string format_vector(const Vector& v, const std::vector<std::string>& names);
std::string format_subspace(const Subspace& s, const std::vector<std::string>& names);

}  // namespace bihom

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclohecke/gf.hpp"
#include "cyclohecke/poly.hpp"

namespace cyclo::linalg {

using gf::Field;
using gf::FieldElement;
using gf::Polynomial;
using Vector = std::vector<FieldElement>;

// Dense row-major matrix over a Field. Entries are bare codes; the field is
// passed explicitly to every operation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& F, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  FieldElement& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const FieldElement> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  Vector column(std::size_t j) const;
  const std::vector<FieldElement>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  bool is_identity(const Field& F) const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix sub(const Field& F, const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, FieldElement c, const Matrix& a);
Matrix mul(const Field& F, const Matrix& a, const Matrix& b);
Vector apply(const Field& F, const Matrix& a, std::span<const FieldElement> v);
Matrix pow(const Field& F, const Matrix& a, std::uint64_t m);
// a + c * I
Matrix add_scalar(const Field& F, const Matrix& a, FieldElement c);

std::size_t rank(const Field& F, Matrix a);
// Basis of {v : a v = 0} read off the reduced row echelon form: one vector
// per free column, with a 1 in that column.
std::vector<Vector> kernel_basis(const Field& F, Matrix a);

// Monic generator of {f : f(a) v = 0}.
Polynomial min_poly_of_vector(const Field& F, const Matrix& a, std::span<const FieldElement> v);
// lcm of the vector minimal polynomials over a set of unit vectors whose
// Krylov spaces span the whole space.
Polynomial min_poly(const Field& F, const Matrix& a);

Matrix eval(const Field& F, const Polynomial& f, const Matrix& a);

// g(a) for g = 1 mod (x - eigen)^m, g = 0 mod h, where the minimal
// polynomial is (x - eigen)^m h with h(eigen) != 0. Zero matrix when eigen
// is not a root.
Matrix crt_projector(const Field& F, const Matrix& a, FieldElement eigen);
Matrix crt_projector(const Field& F, const Matrix& a, const Polynomial& minimal,
                     FieldElement eigen);

// FNV-1a over the entry codes and the shape.
std::uint64_t hash(const Matrix& a) noexcept;

}  // namespace cyclo::linalg

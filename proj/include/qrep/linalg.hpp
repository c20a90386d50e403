#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

using VectorGF = std::vector<FieldElement>;

/// Dense row-major matrix over a field supplied at use sites.
class MatrixGF {
 public:
  MatrixGF() = default;
  MatrixGF(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatrixGF(std::size_t rows, std::size_t cols, VectorGF entries);

  /// Convenience for fixtures: entries given as element indices.
  static MatrixGF from_indices(std::size_t rows, std::size_t cols, std::initializer_list<std::uint32_t> entries);
  static MatrixGF identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<FieldElement> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const VectorGF& entries() const { return data_; }
  VectorGF& entries() { return data_; }

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  VectorGF data_;
};

/// Polynomial over GF(q), lowest degree first, trailing zeros stripped.
struct PolyGF {
  VectorGF coeffs;

  static PolyGF from(VectorGF c);
  static PolyGF monomial(std::size_t degree);
  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  friend bool operator==(const PolyGF&, const PolyGF&) = default;
};

PolyGF poly_add(const FieldSpec& f, const PolyGF& a, const PolyGF& b);
PolyGF poly_sub(const FieldSpec& f, const PolyGF& a, const PolyGF& b);
PolyGF poly_mul(const FieldSpec& f, const PolyGF& a, const PolyGF& b);
FieldElement poly_eval(const FieldSpec& f, const PolyGF& a, FieldElement x);

struct RrefResult {
  MatrixGF reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form with unit pivots.
RrefResult rref(const FieldSpec& f, MatrixGF m);

/// Right null space in the free-variable parameterization, one vector per
/// free column in ascending order.
std::vector<VectorGF> kernel_basis(const FieldSpec& f, const MatrixGF& m);

struct SpanResult {
  std::vector<VectorGF> basis;  // nonzero rows of the RREF of the stacked vectors
  std::size_t dim = 0;
};

SpanResult span_basis(const FieldSpec& f, const std::vector<VectorGF>& vectors);

/// det(lambda I - m) via similarity reduction to upper Hessenberg form.
PolyGF char_poly(const FieldSpec& f, const MatrixGF& m);

/// m^n == 0 for an n x n matrix, by repeated squaring.
bool is_nilpotent(const FieldSpec& f, const MatrixGF& m);

MatrixGF multiply(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b);
MatrixGF add(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b);
MatrixGF subtract(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b);
MatrixGF scale(const FieldSpec& f, FieldElement c, const MatrixGF& a);
MatrixGF transpose(const MatrixGF& a);
/// Gauss-Jordan inverse; empty when singular. Throws NotSquare.
std::optional<MatrixGF> inverse(const FieldSpec& f, const MatrixGF& a);
MatrixGF commutator(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b);
MatrixGF block_diagonal(std::span<const MatrixGF> blocks);

/// Entries space-separated, rows newline-terminated.
std::string format_matrix(const FieldSpec& f, const MatrixGF& m);

namespace detail {

// dst[j] += factor * src[j] over [from, size). Dispatches on the field shape.
void axpy(const FieldSpec& f, std::span<FieldElement> dst, std::span<const FieldElement> src,
          FieldElement factor, std::size_t from = 0);

}  // namespace detail

}  // namespace qrep

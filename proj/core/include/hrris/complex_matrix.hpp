#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hrris {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Shapes stay small in this codebase
/// (receive-array squares, channel blocks), so everything is plain loops
/// over contiguous storage; no views, no sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero-filled matrix. rows and cols must be >= 1.
  ComplexMatrix(int rows, int cols);

  /// Takes ownership of row-major entries; length must be rows*cols and
  /// every component finite.
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(int r, int c) { return entries_[index(r, c)]; }
  const Complex& operator()(int r, int c) const { return entries_[index(r, c)]; }

  const std::vector<Complex>& entries() const { return entries_; }

  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Standard product; throws std::invalid_argument (reporting both shapes)
/// on inner-dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose. Exact involution: hermitian(hermitian(a)) == a bitwise.
ComplexMatrix hermitian(const ComplexMatrix& a);

/// Determinant via LU with partial pivoting. Square input required.
Complex determinant(const ComplexMatrix& a);

/// Inverse via LU with partial pivoting. Throws SingularMatrixError when a
/// pivot magnitude falls below 1e-12 times the largest input entry magnitude.
ComplexMatrix inverse(const ComplexMatrix& a);

/// Sum of diagonal entries. Square input required.
Complex trace(const ComplexMatrix& a);

/// u v^H for column vectors (shape n x 1 each).
ComplexMatrix outer(const ComplexMatrix& u, const ComplexMatrix& v);

/// m += scale * u v^H, accumulated in place for rank-one updates.
void add_scaled_outer(ComplexMatrix& m, Complex scale, const ComplexMatrix& u,
                      const ComplexMatrix& v);

/// u^H v for column vectors of the same length.
Complex vdot(const ComplexMatrix& u, const ComplexMatrix& v);

/// Column c of m as an m.rows() x 1 matrix.
ComplexMatrix column(const ComplexMatrix& m, int c);

/// Row r of m as a 1 x m.cols() matrix.
ComplexMatrix row(const ComplexMatrix& m, int r);

double squared_frobenius_norm(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(double pivot_magnitude);
  double pivot_magnitude() const { return pivot_magnitude_; }

 private:
  double pivot_magnitude_;
};

}  // namespace hrris

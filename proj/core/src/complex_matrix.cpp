#include "hrris/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace hrris {

namespace {

void require_positive_shape(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix shape must be positive, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (a.rows() != a.cols() || a.empty()) {
    throw std::invalid_argument(std::string(op) + ": square matrix required, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

struct LuFactors {
  ComplexMatrix lu;        // L below diagonal (unit), U on and above
  int sign = 1;            // permutation parity
  double min_pivot = 0.0;  // smallest pivot magnitude encountered
};

LuFactors lu_decompose(const ComplexMatrix& a) {
  const int n = a.rows();
  LuFactors f{a, 1, std::numeric_limits<double>::infinity()};
  ComplexMatrix& m = f.lu;
  for (int k = 0; k < n; ++k) {
    int pivot_row = k;
    double pivot_mag = std::abs(m(k, k));
    for (int r = k + 1; r < n; ++r) {
      const double mag = std::abs(m(r, k));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    f.min_pivot = std::min(f.min_pivot, pivot_mag);
    if (pivot_mag == 0.0) {
      continue;  // determinant is exactly zero; elimination of this column is moot
    }
    if (pivot_row != k) {
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pivot_row, c));
      f.sign = -f.sign;
    }
    const Complex pivot = m(k, k);
    for (int r = k + 1; r < n; ++r) {
      const Complex factor = m(r, k) / pivot;
      m(r, k) = factor;
      for (int c = k + 1; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return f;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require_positive_shape(rows, cols);
  entries_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive_shape(rows, cols);
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("entry count " + std::to_string(entries_.size()) +
                                " does not match shape " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  if (!is_finite()) {
    throw std::invalid_argument("non-finite entry in matrix data");
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  if (r == 0) throw std::invalid_argument("from_rows: no rows given");
  const int c = static_cast<int>(rows.begin()->size());
  std::vector<Complex> data;
  data.reserve(static_cast<std::size_t>(r) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("from_rows: ragged rows");
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(data));
}

bool ComplexMatrix::is_finite() const {
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ, " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix hermitian(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Complex determinant(const ComplexMatrix& a) {
  require_square(a, "determinant");
  const LuFactors f = lu_decompose(a);
  Complex det(static_cast<double>(f.sign), 0.0);
  for (int i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  require_square(a, "inverse");
  const int n = a.rows();
  const double floor = 1e-12 * max_abs_entry(a);

  // Track row swaps explicitly so the solve can permute the right-hand sides.
  ComplexMatrix m = a;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int pivot_row = k;
    double pivot_mag = std::abs(m(k, k));
    for (int r = k + 1; r < n; ++r) {
      const double mag = std::abs(m(r, k));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (pivot_mag < floor || pivot_mag == 0.0) {
      throw SingularMatrixError(pivot_mag);
    }
    if (pivot_row != k) {
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pivot_row, c));
      std::swap(perm[k], perm[pivot_row]);
    }
    const Complex pivot = m(k, k);
    for (int r = k + 1; r < n; ++r) {
      const Complex factor = m(r, k) / pivot;
      m(r, k) = factor;
      for (int c = k + 1; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }

  ComplexMatrix out(n, n);
  std::vector<Complex> x(n);
  for (int col = 0; col < n; ++col) {
    // Forward substitution on the permuted unit vector, then back substitution.
    for (int i = 0; i < n; ++i) {
      Complex v = (perm[i] == col) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      for (int j = 0; j < i; ++j) v -= m(i, j) * x[j];
      x[i] = v;
    }
    for (int i = n - 1; i >= 0; --i) {
      Complex v = x[i];
      for (int j = i + 1; j < n; ++j) v -= m(i, j) * x[j];
      x[i] = v / m(i, i);
    }
    for (int i = 0; i < n; ++i) out(i, col) = x[i];
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex t(0.0, 0.0);
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix outer(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.cols() != 1 || v.cols() != 1) {
    throw std::invalid_argument("outer: column vectors required, got " +
                                std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                                " and " + std::to_string(v.rows()) + "x" +
                                std::to_string(v.cols()));
  }
  ComplexMatrix out(u.rows(), v.rows());
  for (int i = 0; i < u.rows(); ++i) {
    for (int j = 0; j < v.rows(); ++j) out(i, j) = u(i, 0) * std::conj(v(j, 0));
  }
  return out;
}

void add_scaled_outer(ComplexMatrix& m, Complex scale, const ComplexMatrix& u,
                      const ComplexMatrix& v) {
  if (u.cols() != 1 || v.cols() != 1 || m.rows() != u.rows() || m.cols() != v.rows()) {
    throw std::invalid_argument("add_scaled_outer: incompatible shapes");
  }
  for (int i = 0; i < m.rows(); ++i) {
    const Complex su = scale * u(i, 0);
    for (int j = 0; j < m.cols(); ++j) m(i, j) += su * std::conj(v(j, 0));
  }
}

Complex vdot(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows()) {
    throw std::invalid_argument("vdot: column vectors of equal length required");
  }
  Complex s(0.0, 0.0);
  for (int i = 0; i < u.rows(); ++i) s += std::conj(u(i, 0)) * v(i, 0);
  return s;
}

ComplexMatrix column(const ComplexMatrix& m, int c) {
  ComplexMatrix out(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) out(i, 0) = m(i, c);
  return out;
}

ComplexMatrix row(const ComplexMatrix& m, int r) {
  ComplexMatrix out(1, m.cols());
  for (int j = 0; j < m.cols(); ++j) out(0, j) = m(r, j);
  return out;
}

double squared_frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const Complex& z : m.entries()) s += std::norm(z);
  return s;
}

double max_abs_entry(const ComplexMatrix& m) {
  double s = 0.0;
  for (const Complex& z : m.entries()) s = std::max(s, std::abs(z));
  return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    s = std::max(s, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return s;
}

SingularMatrixError::SingularMatrixError(double pivot_magnitude)
    : std::runtime_error("matrix is singular to tolerance, failing pivot magnitude " +
                         std::to_string(pivot_magnitude)),
      pivot_magnitude_(pivot_magnitude) {}

}  // namespace hrris

#include "posalg/mat.hpp"

#include <sstream>

#include "posalg/errors.hpp"

namespace posalg {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw ShapeError("entry count does not match rows*cols");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

Mat Mat::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Mat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged row in matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::diagonal(std::span<const Rat> diag) {
  Mat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Mat Mat::ones(std::size_t n) {
  Mat m(n, n);
  for (auto& e : m.entries_) e = 1;
  return m;
}

Mat Mat::jordan(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& e : entries_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

bool Mat::is_nonnegative() const {
  for (const auto& e : entries_) {
    if (sgn(e) < 0) return false;
  }
  return true;
}

bool Mat::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

bool Mat::col_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

Rat Mat::trace() const {
  require_square(*this, "trace");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::power(unsigned k) const {
  require_square(*this, "power");
  Mat result = identity(rows_);
  Mat base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Mat Mat::block(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Mat b(row_idx.size(), col_idx.size());
  for (std::size_t a = 0; a < row_idx.size(); ++a)
    for (std::size_t c = 0; c < col_idx.size(); ++c) b(a, c) = (*this)(row_idx[a], col_idx[c]);
  return b;
}

Mat Mat::permuted(std::span<const std::size_t> perm) const {
  require_square(*this, "permuted");
  if (perm.size() != rows_) throw ShapeError("permutation length differs from matrix size");
  return block(perm, perm);
}

Mat& Mat::operator+=(const Mat& other) {
  require_same_shape(*this, other, "addition");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  require_same_shape(*this, other, "subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Mat& Mat::operator*=(const Rat& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator-(Mat a) { return a *= Rat(-1); }
Mat operator*(Mat a, const Rat& scalar) { return a *= scalar; }
Mat operator*(const Rat& scalar, Mat a) { return a *= scalar; }
Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Mat c(a.rows(), b.cols());
  Rat t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  }
  return c;
}

bool entrywise_ge(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "entrywise comparison");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.entries()[k] < b.entries()[k]) return false;
  }
  return true;
}

Mat commutator(const Mat& a, const Mat& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

void require_square(const Mat& m, const char* what) {
  if (!m.square()) {
    throw ShapeError(std::string(what) + ": expected a square matrix, got " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

void require_nonnegative(const Mat& m, const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) < 0) {
        throw DomainError(std::string(what) + ": negative entry " + to_string(m(i, j)) + " at (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace posalg

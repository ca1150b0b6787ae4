#include "reflex/linalg.hpp"

#include "reflex/integer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace reflex {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::without_row(std::size_t skip) const {
  IntMatrix m(rows_ - 1, cols_);
  for (std::size_t r = 0, out = 0; r < rows_; ++r) {
    if (r == skip) continue;
    std::copy(row(r).begin(), row(r).end(), m.row(out).begin());
    ++out;
  }
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.data_ <=> b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = checked::add(s, checked::mul(a(i, k), b(k, j)));
      out(i, j) = s;
    }
  return out;
}

std::int64_t determinant(const IntMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix m = input;
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(m(i, j)) * m(k, k) - static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = checked::narrow(v / prev);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void column_axpy(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    m(r, target) = checked::sub(m(r, target), checked::mul(factor, m(r, source)));
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

IntMatrix column_hermite_form(IntMatrix m) {
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < m.rows() && pivot_col < m.cols(); ++r) {
    // Euclid across the not-yet-pivoted columns of row r.
    while (true) {
      std::size_t best = m.cols();
      for (std::size_t c = pivot_col; c < m.cols(); ++c) {
        if (m(r, c) == 0) continue;
        if (best == m.cols() || std::abs(m(r, c)) < std::abs(m(r, best))) best = c;
      }
      if (best == m.cols()) break;
      swap_columns(m, pivot_col, best);
      bool done = true;
      for (std::size_t c = pivot_col + 1; c < m.cols(); ++c) {
        if (m(r, c) == 0) continue;
        column_axpy(m, c, pivot_col, m(r, c) / m(r, pivot_col));
        if (m(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, pivot_col) == 0) continue;
    if (m(r, pivot_col) < 0)
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, pivot_col) = -m(i, pivot_col);
    const std::int64_t pivot = m(r, pivot_col);
    for (std::size_t c = 0; c < pivot_col; ++c) column_axpy(m, c, pivot_col, floor_div(m(r, c), pivot));
    ++pivot_col;
  }
  return m;
}

std::int64_t row_lattice_index(const IntMatrix& m) {
  // Row operations on m are column operations on its transpose.
  const IntMatrix h = column_hermite_form(m.transposed());
  std::int64_t index = 1;
  std::size_t col = 0;
  for (std::size_t r = 0; r < h.rows() && col < h.cols(); ++r) {
    if (h(r, col) == 0) return 0;
    index = checked::mul(index, h(r, col));
    ++col;
  }
  return col == h.rows() ? index : 0;
}

}  // namespace reflex

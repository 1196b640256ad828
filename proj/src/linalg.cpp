#include "lipcert/linalg.hpp"

#include <algorithm>
#include <string>

#include "lipcert/error.hpp"

namespace lipcert {
namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

}  // namespace

Vector::Vector(std::vector<Rational> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw DimensionError("vector must have at least one element");
}

Matrix::Matrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix must have at least one row and one column");
  data_.reserve(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) {
      throw DimensionError("ragged matrix: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols_));
    }
    data_.insert(data_.end(), rows[r].begin(), rows[r].end());
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : Matrix([&] {
        std::vector<std::vector<Rational>> copy;
        for (const auto& row : rows) copy.emplace_back(row);
        return copy;
      }()) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix must have at least one row and one column");
  if (data_.size() != rows_ * cols_) throw DimensionError("matrix buffer size does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<Rational> data(n * n);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = Rational(1);
  return Matrix(n, n, std::move(data));
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<Rational>(rows * cols));
}

Vector Matrix::row_vector(std::size_t r) const {
  const auto span = row(r);
  return Vector(std::vector<Rational>(span.begin(), span.end()));
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Rational dot(std::span<const Rational> v, std::span<const Rational> u) {
  require_same_length(v.size(), u.size(), "dot");
  mpq_class acc;
  mpq_class term;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_mul(term.get_mpq_t(), v[i].raw().get_mpq_t(), u[i].raw().get_mpq_t());
    acc += term;
  }
  return Rational::from_mpq(std::move(acc));
}

Vector mv_product(const Matrix& m, const Vector& v) {
  require_same_length(m.cols(), v.size(), "mv_product");
  std::vector<Rational> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(dot(m.row(r), v.elements()));
  return Vector(std::move(out));
}

Vector minus(const Vector& v, const Vector& u) {
  require_same_length(v.size(), u.size(), "minus");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i] - u[i]);
  return Vector(std::move(out));
}

Vector add(const Vector& v, const Vector& u) {
  require_same_length(v.size(), u.size(), "add");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i] + u[i]);
  return Vector(std::move(out));
}

Rational squared_l2(std::span<const Rational> v) { return dot(v, v); }

Rational squared_frobenius(const Matrix& m) { return squared_l2(m.data()); }

Rational l2_upper_bound(const Vector& v, const SqrtConfig& cfg) {
  return sqrt_upper_bound(squared_l2(v), cfg).value;
}

Rational frobenius_norm_upper_bound(const Matrix& m, const SqrtConfig& cfg) {
  return sqrt_upper_bound(squared_frobenius(m), cfg).value;
}

Matrix mtm(const Matrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // Column j of m becomes contiguous row j of the transposed copy.
  std::vector<Rational> transposed(n * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) transposed[c * k + r] = m(r, c);
  }
  const std::span<const Rational> t(transposed);
  std::vector<Rational> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out[i * n + j] = dot(t.subspan(i * k, k), t.subspan(j * k, k));
      if (j != i) out[j * n + i] = out[i * n + j];
    }
  }
  return Matrix(n, n, std::move(out));
}

Matrix matrix_div(const Matrix& m, const Rational& r) {
  if (r.sign() <= 0) throw DomainError("matrix_div requires a positive divisor, got " + r.to_string());
  std::vector<Rational> out;
  out.reserve(m.data().size());
  for (const auto& x : m.data()) out.push_back(x / r);
  return Matrix(m.rows(), m.cols(), std::move(out));
}

TruncatedMatrix truncate_with_error(const Matrix& m, unsigned places) {
  if (!m.is_symmetric()) throw DomainError("truncate_with_error requires a square symmetric matrix");
  std::vector<Rational> truncated;
  std::vector<Rational> error;
  truncated.reserve(m.data().size());
  error.reserve(m.data().size());
  for (const auto& x : m.data()) {
    auto t = truncate(x, places);
    truncated.push_back(std::move(t.value));
    error.push_back(std::move(t.error));
  }
  return {Matrix(m.rows(), m.cols(), std::move(truncated)), Matrix(m.rows(), m.cols(), std::move(error))};
}

bool is_zero_matrix(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace lipcert

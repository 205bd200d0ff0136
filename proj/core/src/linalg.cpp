#include "toricsec/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricsec {

namespace {

using BigInt = boost::multiprecision::cpp_int;

Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw std::overflow_error("integer result does not fit in 64 bits");
  }
  return static_cast<Int>(v);
}

struct Overflow {};

// Checked 64-bit arithmetic for the fast Bareiss path.
struct CheckedInt {
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
};

struct BigOps {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
};

template <class T, class Ops>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = Ops::sub(Ops::mul(a[r][c], a[i][j]), Ops::mul(a[i][c], a[r][j])) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::vector<BigInt>> to_big(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

// (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<BigInt, BigInt, BigInt> extended_gcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const BigInt q = a / b;
    BigInt r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    BigInt x2 = x0 - q * x1;
    x0 = std::move(x1);
    x1 = std::move(x2);
    BigInt y2 = y0 - q * y1;
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
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

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in dot product");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  return to_int(bareiss_det(to_big(m)));
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Cofactor C_ij goes to adj(j, i).
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      const Int cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m) {
  const Int d = determinant(m);
  if (d != 1 && d != -1) return std::nullopt;
  IntMatrix adj = adjugate(m);
  if (d == -1) {
    for (std::size_t r = 0; r < adj.rows(); ++r) {
      for (std::size_t c = 0; c < adj.cols(); ++c) adj(r, c) = -adj(r, c);
    }
  }
  return adj;
}

std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  try {
    std::vector<std::vector<Int>> a(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a[r].assign(m.row(r).begin(), m.row(r).end());
    return bareiss_rank<Int, CheckedInt>(std::move(a), m.cols());
  } catch (const Overflow&) {
    return bareiss_rank<BigInt, BigOps>(to_big(m), m.cols());
  }
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  auto a = to_big(m);
  std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n));  // u[col][row]
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  // Unimodular column operations bring `a` to column echelon form; the
  // transform columns past the pivots span the integer kernel.
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < n; ++r) {
    for (std::size_t c = pivot + 1; c < n; ++c) {
      if (a[r][c] == 0) continue;
      const BigInt p = a[r][pivot];
      const BigInt q = a[r][c];
      auto [g, x, y] = extended_gcd(p, q);
      const BigInt pc = p / g;
      const BigInt qc = q / g;
      for (std::size_t i = 0; i < rows; ++i) {
        const BigInt ap = a[i][pivot];
        const BigInt ac = a[i][c];
        a[i][pivot] = x * ap + y * ac;
        a[i][c] = -qc * ap + pc * ac;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const BigInt up = u[pivot][i];
        const BigInt uc = u[c][i];
        u[pivot][i] = x * up + y * uc;
        u[c][i] = -qc * up + pc * uc;
      }
    }
    if (a[r][pivot] != 0) ++pivot;
  }

  IntMatrix basis(n, n - pivot);
  for (std::size_t k = pivot; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) basis(i, k - pivot) = to_int(u[k][i]);
  }
  return basis;
}

bool homogeneous_feasible(std::size_t dim, std::span<const IntVector> zero,
                          std::span<const IntVector> positive) {
  // Each constraint is (c_0..c_{dim-1}, c_dim) meaning <c, h> + c_dim >= 0.
  // Strict inequalities are homogenized to <a, h> >= 1.
  using Row = std::vector<BigInt>;
  std::set<Row> rows;
  auto normalize_insert = [&rows, dim](Row row) -> bool {
    BigInt g = 0;
    for (const auto& x : row) g = boost::multiprecision::gcd(g, x);
    if (g > 1) {
      for (auto& x : row) x /= g;
    }
    bool all_zero = true;
    for (std::size_t i = 0; i < dim; ++i) all_zero = all_zero && row[i] == 0;
    if (all_zero) return row[dim] >= 0;
    rows.insert(std::move(row));
    return true;
  };
  for (const auto& a : zero) {
    if (a.size() != dim) throw std::invalid_argument("constraint dimension mismatch");
    Row plus(dim + 1), minus(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
      plus[i] = a[i];
      minus[i] = -a[i];
    }
    normalize_insert(std::move(plus));
    normalize_insert(std::move(minus));
  }
  for (const auto& a : positive) {
    if (a.size() != dim) throw std::invalid_argument("constraint dimension mismatch");
    Row row(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) row[i] = a[i];
    row[dim] = -1;
    if (!normalize_insert(std::move(row))) return false;
  }

  for (std::size_t var = 0; var < dim; ++var) {
    std::vector<Row> pos, neg;
    std::set<Row> next;
    for (const auto& row : rows) {
      if (row[var] > 0) pos.push_back(row);
      else if (row[var] < 0) neg.push_back(row);
      else next.insert(row);
    }
    rows = std::move(next);
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Row combo(dim + 1);
        const BigInt sp = -q[var];
        const BigInt sq = p[var];
        for (std::size_t i = 0; i <= dim; ++i) combo[i] = sp * p[i] + sq * q[i];
        if (!normalize_insert(std::move(combo))) return false;
      }
    }
  }
  return true;
}

}  // namespace toricsec

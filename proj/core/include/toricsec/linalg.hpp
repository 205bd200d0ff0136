#pragma once

// Exact integer linear algebra used by the fan, divisor and cohomology code.
// Nothing in here touches floating point.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace toricsec {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors (all of length `cols`).
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector column(std::size_t c) const;

  IntVector apply(std::span<const Int> v) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Int dot(std::span<const Int> a, std::span<const Int> b);
Int gcd_of(std::span<const Int> v);

/// Determinant of a square matrix (Bareiss). Throws std::overflow_error if the
/// result does not fit in Int.
Int determinant(const IntMatrix& m);

/// Adjugate of a square matrix: adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Inverse of a unimodular matrix; std::nullopt when |det| != 1.
std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m);

/// Rank over the rationals via fraction-free elimination. Runs in 64-bit
/// arithmetic and transparently restarts in arbitrary precision on overflow.
std::size_t rank(const IntMatrix& m);

/// Columns form a basis of the saturated lattice {x in Z^n : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Strict feasibility of a homogeneous system: is there a rational h with
/// <a, h> = 0 for every a in `zero`, <a, h> > 0 for every a in `positive`?
/// Decided exactly by Fourier-Motzkin elimination.
bool homogeneous_feasible(std::size_t dim, std::span<const IntVector> zero,
                          std::span<const IntVector> positive);

}  // namespace toricsec

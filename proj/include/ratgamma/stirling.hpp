#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "ratgamma/core/hpreal.hpp"
#include "ratgamma/core/rational.hpp"

namespace ratgamma {

// Signed Stirling numbers of the first kind S1(n, l), 0 <= l <= n <= n_max,
// defined by z(z-1)...(z-n+1) = sum_l S1(n,l) z^l.
struct StirlingTriangle {
  long n_max = 0;
  std::vector<std::vector<BigInt>> rows;  // rows[n][l], l = 0..n
};

inline constexpr std::size_t kDefaultStirlingBudget = std::size_t{1} << 30;

// Estimated storage for a triangle up to n_max, in bytes.
std::size_t triangle_bytes(long n_max);

// Row recurrence S1(n+1,l) = S1(n,l-1) - n S1(n,l). Throws ResourceError when
// the estimated storage exceeds the budget.
StirlingTriangle build_triangle(long n_max, std::size_t budget_bytes = kDefaultStirlingBudget);

// Process-wide triangle covering at least n_max, grown on demand.
std::shared_ptr<const StirlingTriangle> shared_triangle(long n_max);

// Range error for negative indices or n > t.n_max; zero outside 1 <= l <= n.
BigInt signed_s1(const StirlingTriangle& t, long n, long l);
BigInt unsigned_s1(const StirlingTriangle& t, long n, long l);

// Closed double-sum formula, independent of the recurrence. Requires 1 <= l <= n.
BigInt explicit_formula(long n, long l);

// Coefficients of z(z+1)...(z+n-1); entry l is |S1(n,l)|, entry 0 is zero.
std::vector<BigInt> pochhammer_coeffs(long n);

// |sum_{n=l}^{N} S1(n,l) z^n / n! - ln^l(1+z) / l!| evaluated at the given precision.
HPReal genfunc_residual(long l, long N, const HPReal& z, long bits);

// Floating sweep over rows of unnormalized |S1(n,k)| for k = 0..columns,
// updated in place. Columns beyond the cap are dropped; retained columns stay
// exact up to rounding because each entry depends only on columns k-1 and k.
class UnsignedRowSweep {
 public:
  UnsignedRowSweep(long columns, long bits);
  long n() const { return n_; }
  long columns() const { return columns_; }
  // Moves from row n to row n+1.
  void advance();
  // Entry |S1(n,k)| for 0 <= k <= columns.
  const HPReal& operator[](long k) const { return row_[static_cast<std::size_t>(k)]; }
  // n! at the sweep precision.
  const HPReal& factorial() const { return fact_; }

 private:
  long columns_;
  long n_ = 1;
  std::vector<HPReal> row_;
  HPReal fact_;
};

// Natural logarithms of |S1(n,k)|/n! in double precision, used to plan
// precision and column cut-offs. Zero entries are -infinity.
class LogRowSweep {
 public:
  explicit LogRowSweep(long columns);
  long n() const { return n_; }
  void advance();
  double operator[](long k) const { return row_[static_cast<std::size_t>(k)]; }
  long columns() const { return columns_; }

 private:
  long columns_;
  long n_ = 1;
  std::vector<double> row_;
};

}  // namespace ratgamma

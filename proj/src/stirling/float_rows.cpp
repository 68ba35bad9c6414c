#include <cmath>
#include <limits>

#include "ratgamma/core/errors.hpp"
#include "ratgamma/stirling.hpp"

namespace ratgamma {

UnsignedRowSweep::UnsignedRowSweep(long columns, long bits) : columns_(columns), fact_(HPReal::from_long(1, bits)) {
  if (columns < 1) throw DomainError("row sweep needs at least one column");
  row_.assign(static_cast<std::size_t>(columns + 1), HPReal(bits));
  row_[1] = HPReal::from_long(1, bits);  // |S1(1,1)| = 1
}

void UnsignedRowSweep::advance() {
  // |S1(n+1,k)| = |S1(n,k-1)| + n |S1(n,k)|, k descending so row_[k-1] is still row n.
  const long top = std::min(columns_, n_ + 1);
  for (long k = top; k >= 1; --k) {
    HPReal& cur = row_[static_cast<std::size_t>(k)];
    mpfr_mul_ui(cur.get(), cur.get(), static_cast<unsigned long>(n_), MPFR_RNDN);
    mpfr_add(cur.get(), cur.get(), row_[static_cast<std::size_t>(k - 1)].get(), MPFR_RNDN);
  }
  ++n_;
  mpfr_mul_ui(fact_.get(), fact_.get(), static_cast<unsigned long>(n_), MPFR_RNDN);
}

LogRowSweep::LogRowSweep(long columns) : columns_(columns) {
  if (columns < 1) throw DomainError("row sweep needs at least one column");
  row_.assign(static_cast<std::size_t>(columns + 1), -std::numeric_limits<double>::infinity());
  row_[1] = 0.0;  // |S1(1,1)|/1! = 1
}

void LogRowSweep::advance() {
  // u(n+1,k) = (u(n,k-1) + n u(n,k)) / (n+1) with u = |S1|/n!, in log space.
  const double ln_n = std::log(static_cast<double>(n_));
  const double ln_n1 = std::log(static_cast<double>(n_ + 1));
  const long top = std::min(columns_, n_ + 1);
  for (long k = top; k >= 1; --k) {
    const double a = row_[static_cast<std::size_t>(k - 1)];
    const double b = row_[static_cast<std::size_t>(k)] + ln_n;
    double m = std::max(a, b);
    if (std::isinf(m)) {
      row_[static_cast<std::size_t>(k)] = m;
      continue;
    }
    row_[static_cast<std::size_t>(k)] = m + std::log1p(std::exp(std::min(a, b) - m)) - ln_n1;
  }
  ++n_;
}

}  // namespace ratgamma

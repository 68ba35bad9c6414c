#include "ratgamma/stirling.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "ratgamma/core/errors.hpp"

namespace ratgamma {

namespace {

void extend_rows(StirlingTriangle& t, long n_max) {
  if (t.rows.empty()) t.rows.push_back({BigInt(1)});
  for (long n = static_cast<long>(t.rows.size()) - 1; n < n_max; ++n) {
    const auto& prev = t.rows[static_cast<std::size_t>(n)];
    std::vector<BigInt> next(static_cast<std::size_t>(n + 2));
    for (long l = 1; l <= n + 1; ++l) {
      BigInt v = prev[static_cast<std::size_t>(l - 1)];
      if (l <= n) v -= n * prev[static_cast<std::size_t>(l)];
      next[static_cast<std::size_t>(l)] = std::move(v);
    }
    t.rows.push_back(std::move(next));
  }
  t.n_max = n_max;
}

void check_index(const StirlingTriangle& t, long n, long l) {
  if (n < 0 || l < 0) throw RangeError("negative Stirling index");
  if (n > t.n_max) throw RangeError("n = " + std::to_string(n) + " exceeds triangle size " + std::to_string(t.n_max));
}

}  // namespace

std::size_t triangle_bytes(long n_max) {
  if (n_max < 0) return 0;
  // Entries are bounded by n!, so log2(n_max!) bits each, plus mpz overhead.
  const double bits_per_entry = std::lgamma(static_cast<double>(n_max) + 1.0) / std::log(2.0);
  const double entries = 0.5 * static_cast<double>(n_max + 1) * static_cast<double>(n_max + 2);
  const double bytes = entries * (bits_per_entry / 8.0 + 16.0);
  return bytes > 1e18 ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(bytes);
}

StirlingTriangle build_triangle(long n_max, std::size_t budget_bytes) {
  if (n_max < 0) throw RangeError("n_max must be non-negative");
  if (triangle_bytes(n_max) > budget_bytes) {
    throw ResourceError("Stirling triangle up to n = " + std::to_string(n_max) + " exceeds the memory budget");
  }
  StirlingTriangle t;
  extend_rows(t, n_max);
  return t;
}

std::shared_ptr<const StirlingTriangle> shared_triangle(long n_max) {
  static std::mutex mu;
  static std::shared_ptr<const StirlingTriangle> current;
  std::lock_guard<std::mutex> lock(mu);
  if (current && current->n_max >= n_max) return current;
  if (triangle_bytes(n_max) > kDefaultStirlingBudget) {
    throw ResourceError("Stirling triangle up to n = " + std::to_string(n_max) + " exceeds the memory budget");
  }
  auto grown = current ? std::make_shared<StirlingTriangle>(*current) : std::make_shared<StirlingTriangle>();
  extend_rows(*grown, n_max);
  current = grown;
  return current;
}

BigInt signed_s1(const StirlingTriangle& t, long n, long l) {
  check_index(t, n, l);
  if (l > n) return 0;
  return t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
}

BigInt unsigned_s1(const StirlingTriangle& t, long n, long l) { return abs(signed_s1(t, n, l)); }

BigInt explicit_formula(long n, long l) {
  if (l < 1 || l > n) throw DomainError("explicit formula requires 1 <= l <= n");
  const long d = n - l;
  Rational total(0);
  for (long k = 0; k <= d; ++k) {
    // sum_r (-1)^r C(k,r) r^(d+k)
    BigInt inner = 0;
    for (long r = 0; r <= k; ++r) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(d + k));
      BigInt term = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(r)) * p;
      if (r % 2) inner -= term; else inner += term;
    }
    BigInt den = factorial(static_cast<unsigned long>(k)) * (n + k) * factorial(static_cast<unsigned long>(d - k)) *
                 factorial(static_cast<unsigned long>(d + k));
    total += Rational(inner, den);
  }
  total *= Rational(factorial(static_cast<unsigned long>(2 * n - l)), factorial(static_cast<unsigned long>(l - 1)));
  if (!total.is_integer()) throw std::logic_error("explicit Stirling formula produced a non-integer");
  return total.num();
}

std::vector<BigInt> pochhammer_coeffs(long n) {
  if (n < 1) throw DomainError("pochhammer_coeffs requires n >= 1");
  // Multiply out z(z+1)...(z+n-1) directly.
  std::vector<BigInt> c{BigInt(0), BigInt(1)};
  for (long k = 1; k < n; ++k) {
    std::vector<BigInt> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] += k * c[i];
    }
    c = std::move(next);
  }
  return c;
}

HPReal genfunc_residual(long l, long N, const HPReal& z, long bits) {
  if (abs(z) >= 1.0) throw DomainError("generating function residual requires |z| < 1");
  if (l < 0 || N < l) throw DomainError("genfunc_residual requires 0 <= l <= N");
  const long wp = bits + 32;
  auto t = shared_triangle(N);
  HPReal zw = z.with_bits(wp);
  HPReal zn = HPReal::from_long(1, wp);  // z^n / n!
  HPReal sum(wp);
  for (long n = 0; n <= N; ++n) {
    if (n > 0) zn = zn * zw / n;
    if (n >= l) sum += HPReal::from_bigint(signed_s1(*t, n, l), wp) * zn;
  }
  HPReal closed = pow(log1p(zw), l) / HPReal::from_bigint(factorial(static_cast<unsigned long>(l)), wp);
  return abs(sum - closed).with_bits(bits);
}

}  // namespace ratgamma

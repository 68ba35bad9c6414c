#pragma once

#include <functional>
#include <vector>

#include "ratgamma/core/complex_hp.hpp"

namespace ratgamma::detail {

// Weights c_l = (-1)^l (2l+s)! g_l x^{2l+1}, with g_l = 2^{2l+1} - 1 when
// twofold is set and 1 otherwise. The sweep produces
//   inner_n = (1/n!) sum_l c_l |S1(n, 2l+1)|.
struct WeightSpec {
  long s = 0;
  bool twofold = false;
  ComplexHP x;
  // log of |factor| applied to inner_n (or inner_n/n) before summation,
  // used only to plan precision.
  double log_scale = 0.0;
  bool divide_by_n = true;
};

struct SweepPlan {
  long target_bits = 0;  // requested accuracy
  long bits = 0;         // working precision of the sweep
  long columns = 0;  // largest Stirling column kept
  std::vector<long> last_column;  // per n, largest column with a non-negligible contribution
};

// Chooses precision and column cut-off so that every contribution below
// 2^-(bits+40) relative to O(1) partial sums can be dropped and cancellation
// among the rest is absorbed.
SweepPlan plan_sweep(const std::vector<WeightSpec>& specs, long N, long bits);

// Calls visit(n, inner) for n = 1..N with inner[i] for specs[i], at plan.bits.
void run_sweep(const std::vector<WeightSpec>& specs, long N, const SweepPlan& plan,
               const std::function<void(long, const std::vector<ComplexHP>&)>& visit);

}  // namespace ratgamma::detail

#pragma once

#include "taskswap/errors.hpp"
#include "taskswap/planner.hpp"

namespace taskswap {

// Uniform per-swap migration cost and the two assignment running costs.
struct CostParams {
  double cost_per_swap = 1.0;  // c >= 0
  double h1 = 0.0;             // running cost of the source assignment
  double h2 = 0.0;             // running cost of the target assignment
};

// f = c * s1, with s1 the number of distance-1 swaps.
inline double migration_cost(const SwapPlan& plan, const CostParams& params) {
  if (params.cost_per_swap < 0) {
    throw ValidationError("cost per swap must be nonnegative");
  }
  return params.cost_per_swap * static_cast<double>(plan.length());
}

// b = h1 - h2 - f; negative means the reassignment is not worth migrating.
inline double reassignment_benefit(const CostParams& params, double f) {
  return params.h1 - params.h2 - f;
}

struct BenefitReport {
  double h1 = 0.0;
  double h2 = 0.0;
  double f = 0.0;
  double benefit = 0.0;
  bool desirable = false;
};

inline BenefitReport benefit_report(const CostParams& params, double f) {
  BenefitReport r;
  r.h1 = params.h1;
  r.h2 = params.h2;
  r.f = f;
  r.benefit = reassignment_benefit(params, f);
  r.desirable = r.benefit > 0;
  return r;
}

}  // namespace taskswap

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taskswap/cost.hpp"
#include "taskswap/permutation.hpp"
#include "taskswap/planner.hpp"

namespace taskswap {

// Permutations serialize as one-line arrays, e.g. [2,5,6,3,1,4,8,7];
// plans as {"length": L, "swaps": [[a,b],...]} with an optional "states"
// trajectory (source through target inclusive).

std::string permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const std::string& json_text);

std::string plan_to_json(const SwapPlan& plan,
                         const std::vector<Permutation>* states = nullptr);
SwapPlan plan_from_json(const std::string& json_text);

std::vector<Permutation> plan_states(const Permutation& source,
                                     const SwapPlan& plan);

std::string benefit_report_to_json(const BenefitReport& report);

}  // namespace taskswap

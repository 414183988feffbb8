#include "taskswap/serialize.hpp"

#include <json.hpp>

namespace taskswap {

namespace {

nlohmann::json parse_or_throw(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

std::vector<int> int_array(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string(what) + ": expected integer entries");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string permutation_to_json(const Permutation& p) {
  return nlohmann::json(p.one_line()).dump();
}

Permutation permutation_from_json(const std::string& json_text) {
  return Permutation(int_array(parse_or_throw(json_text, "assignment"),
                               "assignment"));
}

std::string plan_to_json(const SwapPlan& plan,
                         const std::vector<Permutation>* states) {
  nlohmann::json j;
  j["length"] = plan.length();
  auto swaps = nlohmann::json::array();
  for (const auto& t : plan.swaps) swaps.push_back({t.a, t.b});
  j["swaps"] = swaps;
  if (states) {
    auto st = nlohmann::json::array();
    for (const auto& p : *states) st.push_back(p.one_line());
    j["states"] = st;
  }
  return j.dump();
}

SwapPlan plan_from_json(const std::string& json_text) {
  const auto j = parse_or_throw(json_text, "plan");
  if (!j.is_object() || !j.contains("swaps") || !j["swaps"].is_array()) {
    throw ParseError("plan: expected an object with a \"swaps\" array");
  }
  SwapPlan plan;
  for (const auto& e : j["swaps"]) {
    const auto pair = int_array(e, "plan swap");
    if (pair.size() != 2) throw ParseError("plan swap: expected a pair [a,b]");
    plan.swaps.emplace_back(pair[0], pair[1]);
  }
  if (j.contains("length")) {
    if (!j["length"].is_number_integer() ||
        j["length"].get<long>() != static_cast<long>(plan.length())) {
      throw ParseError("plan: \"length\" disagrees with the swap count");
    }
  }
  return plan;
}

std::vector<Permutation> plan_states(const Permutation& source,
                                     const SwapPlan& plan) {
  std::vector<Permutation> states{source};
  for (const auto& t : plan.swaps) states.push_back(apply_swap(states.back(), t));
  return states;
}

std::string benefit_report_to_json(const BenefitReport& report) {
  nlohmann::json j;
  j["h1"] = report.h1;
  j["h2"] = report.h2;
  j["f"] = report.f;
  j["benefit"] = report.benefit;
  j["desirable"] = report.desirable;
  return j.dump();
}

}  // namespace taskswap

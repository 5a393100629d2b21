#pragma once

#include "json.hpp"

#include "coxamida/oracle.hpp"

namespace coxamida {

inline void to_json(nlohmann::json& j, const VerificationReport& report) {
  j = nlohmann::json{
      {"claim", report.claim},
      {"n", report.n},
      {"expected", report.expected ? nlohmann::json(*report.expected) : nlohmann::json()},
      {"computed", report.computed ? nlohmann::json(*report.computed) : nlohmann::json()},
      {"pass", report.pass},
      {"witnesses", report.witnesses},
      {"elapsed_ms", report.elapsed_ms},
  };
}

}  // namespace coxamida

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fakedeg/qpoly.hpp"

namespace fakedeg {

/// {"coeffs": ["1","0","2"], "pretty": "1 + 2q^2"}; coefficients are decimal
/// strings so values of any size survive a round trip.
nlohmann::json poly_to_json(const QPolynomial& p);

struct VerifyReport {
  std::vector<nlohmann::json> records;
  int failures = 0;
  /// Diagnostics that never fail a suite (palindromicity, literal flip sweeps).
  int notes = 0;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") exhaustively up to rank max_n and collects one
/// JSON record per representation or shape. Records carry "agree"; a false
/// value counts as a failure. std::invalid_argument for an unknown suite.
VerifyReport run_suite(std::string_view suite, int max_n);

}  // namespace fakedeg

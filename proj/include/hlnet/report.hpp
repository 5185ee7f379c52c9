#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace hlnet {

using Json = nlohmann::ordered_json;

enum class ReportStatus { verified, refuted, bounded };

std::string to_string(ReportStatus status);

/**
 * Outcome of one claim check.
 *
 * A refuted report carries a counterwitness that can be replayed through the
 * graph primitives; a bounded report states the searched region in `detail`.
 */
struct VerificationReport {
  std::string claim_id;
  Json parameters = Json::object();
  ReportStatus status = ReportStatus::verified;
  std::string detail;
  Json witness;
  Json counterwitness;
  std::vector<std::string> population;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;

  bool verified() const { return status == ReportStatus::verified; }

  /// Downgrades to refuted and records the first counterwitness seen.
  void refute(std::string why, Json counter);
};

/// Wall-clock stopwatch for report timing.
class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace hlnet

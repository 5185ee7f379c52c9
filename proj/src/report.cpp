#include "hlnet/report.hpp"

namespace hlnet {

std::string to_string(ReportStatus status) {
  switch (status) {
  case ReportStatus::verified:
    return "verified";
  case ReportStatus::refuted:
    return "refuted";
  case ReportStatus::bounded:
    break;
  }
  return "bounded";
}

void VerificationReport::refute(std::string why, Json counter) {
  if (status == ReportStatus::refuted)
    return;
  status = ReportStatus::refuted;
  detail = std::move(why);
  counterwitness = std::move(counter);
}

} // namespace hlnet

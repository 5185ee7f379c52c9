#include "hlnet/progress.hpp"

#include <mutex>

namespace hlnet {

namespace {

std::mutex sink_mutex;
ProgressSink current_sink = nullptr;
void *current_user = nullptr;

} // namespace

void set_progress_sink(ProgressSink sink, void *user) {
  std::lock_guard lock(sink_mutex);
  current_sink = sink;
  current_user = user;
}

void report_progress(const std::string &message) {
  std::lock_guard lock(sink_mutex);
  if (current_sink != nullptr)
    current_sink(message.c_str(), current_user);
}

} // namespace hlnet

#pragma once

#include <string>

namespace hlnet {

/// Receiver for progress lines from long searches. Never stdout: reports
/// must stay parseable.
using ProgressSink = void (*)(const char *message, void *user);

void set_progress_sink(ProgressSink sink, void *user);
void report_progress(const std::string &message);

} // namespace hlnet

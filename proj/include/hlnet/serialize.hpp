#pragma once

// Text forms for graphs, certificates and reports. JSON documents carry a
// "schema" tag; the matching JSON Schemas live in docs/schemas.

#include "hlnet/compact_graph.hpp"
#include "hlnet/extra_connectivity.hpp"
#include "hlnet/report.hpp"

#include <string>
#include <string_view>

namespace hlnet::io {

enum class Format { json, dot, edgelist, table };

Format parse_format(std::string_view name);

/// {"schema", "spec", "order", "labels", "edges"} with edges [u, v], u < v,
/// sorted. One edge per line so files diff cleanly.
std::string graph_to_json(const CompactGraph &g, const std::string &spec);
std::string graph_to_dot(const CompactGraph &g, const std::string &spec);
std::string graph_to_edgelist(const CompactGraph &g, const std::string &spec);
std::string graph_to_table(const CompactGraph &g, const std::string &spec);
std::string write_graph(const CompactGraph &g, const std::string &spec, Format format);

struct LoadedGraph {
  CompactGraph graph;
  std::string spec;
};

/// Parses the JSON graph document; throws invalid_argument on malformed
/// input or a graph that violates the CompactGraph invariants.
LoadedGraph graph_from_json(std::string_view text);

struct CertificateContext {
  std::string spec;
  std::string mode;
  /// Names of the star leaves for star-based certificates.
  std::vector<std::string> leaf_names;
  std::optional<std::int64_t> cited_lower_bound;
  Json extra = Json::object();
};

Json certificate_json(const extra::CutsetCertificate &cert, const CertificateContext &context,
                      std::optional<double> elapsed_ms);
Json report_json(const VerificationReport &report, bool include_timing);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json &document);

/// "key: value" lines; nested values are printed as compact JSON.
std::string to_table(const Json &document);

} // namespace hlnet::io

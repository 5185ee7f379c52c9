#include "hlnet/serialize.hpp"

#include "hlnet/error.hpp"

#include <sstream>

namespace hlnet::io {

namespace {

std::string quoted(const std::string &s) { return Json(s).dump(); }

std::vector<std::string> labels_of(const CompactGraph &g) {
  std::vector<std::string> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    out.push_back(g.label(v));
  return out;
}

void table_line(std::ostringstream &out, const std::string &key, const Json &value) {
  out << key << ": ";
  if (value.is_string())
    out << value.get<std::string>();
  else
    out << value.dump();
  out << '\n';
}

} // namespace

Format parse_format(std::string_view name) {
  if (name == "json")
    return Format::json;
  if (name == "dot")
    return Format::dot;
  if (name == "edgelist")
    return Format::edgelist;
  if (name == "table")
    return Format::table;
  fail_argument("unknown format '" + std::string(name) + "' (json, dot, edgelist, table)");
}

std::string graph_to_json(const CompactGraph &g, const std::string &spec) {
  std::ostringstream out;
  out << "{\n  \"schema\": \"hlnet.graph/1\",\n  \"spec\": " << quoted(spec) << ",\n  \"order\": " << g.order()
      << ",\n  \"labels\": [";
  const auto labels = labels_of(g);
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << (i == 0 ? "" : ", ") << quoted(labels[i]);
  out << "],\n  \"edges\": [";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    out << (i == 0 ? "\n    " : ",\n    ") << '[' << edges[i].first << ", " << edges[i].second << ']';
  out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::string graph_to_dot(const CompactGraph &g, const std::string &spec) {
  std::ostringstream out;
  out << "graph " << quoted(spec) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    out << "  " << v << " [label=" << quoted(g.label(v)) << "];\n";
  for (const auto &[u, v] : g.edges())
    out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_edgelist(const CompactGraph &g, const std::string &spec) {
  std::ostringstream out;
  out << "# " << spec << "\n# order " << g.order() << " edges " << g.edge_count() << '\n';
  for (const auto &[u, v] : g.edges())
    out << u << ' ' << v << '\n';
  return out.str();
}

std::string graph_to_table(const CompactGraph &g, const std::string &spec) {
  std::ostringstream out;
  out << "spec: " << spec << "\norder: " << g.order() << "\nedges: " << g.edge_count() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    out << v << '\t' << g.label(v) << '\t';
    bool first = true;
    for (Vertex w : g.neighbors(v)) {
      out << (first ? "" : " ") << w;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string write_graph(const CompactGraph &g, const std::string &spec, Format format) {
  switch (format) {
  case Format::json:
    return graph_to_json(g, spec);
  case Format::dot:
    return graph_to_dot(g, spec);
  case Format::edgelist:
    return graph_to_edgelist(g, spec);
  case Format::table:
    break;
  }
  return graph_to_table(g, spec);
}

LoadedGraph graph_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    fail_argument(std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("edges"))
    fail_argument("graph document needs \"order\" and \"edges\"");
  if (doc.contains("schema") && doc["schema"] != "hlnet.graph/1")
    fail_argument("unsupported graph schema " + doc["schema"].dump());
  if (!doc["order"].is_number_unsigned())
    fail_argument("\"order\" must be a non-negative integer");
  const auto order = doc["order"].get<std::size_t>();
  if (order > max_order)
    fail_argument("graph order exceeds " + std::to_string(max_order));
  std::vector<Edge> edges;
  for (const auto &e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      fail_argument("each edge must be a pair of vertex indices");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto &l : doc["labels"]) {
      if (!l.is_string())
        fail_argument("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  LoadedGraph out{CompactGraph::from_edges(order, edges, std::move(labels)), "file"};
  if (doc.contains("spec") && doc["spec"].is_string())
    out.spec = doc["spec"].get<std::string>();
  return out;
}

Json certificate_json(const extra::CutsetCertificate &cert, const CertificateContext &context,
                      std::optional<double> elapsed_ms) {
  Json doc;
  doc["schema"] = "hlnet.certificate/1";
  doc["spec"] = context.spec;
  doc["mode"] = context.mode;
  doc["g"] = cert.extra;
  doc["kind"] = extra::to_string(cert.kind);
  doc["outcome"] = cert.outcome == extra::SearchOutcome::definitive ? "definitive" : "bounded";
  doc["value"] = cert.value ? Json(*cert.value) : Json();
  doc["witness"] = cert.witness;
  if (!context.leaf_names.empty())
    doc["leaves"] = context.leaf_names;
  doc["cutset"] = cert.cutset;
  doc["componentSizes"] = cert.component_sizes;
  if (context.cited_lower_bound)
    doc["citedLowerBound"] = *context.cited_lower_bound;
  doc["budget"] = cert.budget;
  for (auto it = context.extra.begin(); it != context.extra.end(); ++it)
    doc[it.key()] = it.value();
  if (elapsed_ms)
    doc["elapsedMillis"] = static_cast<std::int64_t>(*elapsed_ms);
  return doc;
}

Json report_json(const VerificationReport &report, bool include_timing) {
  Json doc;
  doc["schema"] = "hlnet.report/1";
  doc["claimId"] = report.claim_id;
  doc["parameters"] = report.parameters.is_null() ? Json::object() : report.parameters;
  doc["status"] = to_string(report.status);
  if (!report.detail.empty())
    doc["detail"] = report.detail;
  doc["witness"] = report.witness;
  if (report.status == ReportStatus::refuted)
    doc["counterwitness"] = report.counterwitness;
  doc["population"] = report.population;
  doc["seeds"] = report.seeds;
  if (!report.notes.empty())
    doc["notes"] = report.notes;
  if (include_timing)
    doc["elapsedMillis"] = static_cast<std::int64_t>(report.elapsed_ms);
  return doc;
}

std::string dump(const Json &document) { return document.dump(2) + "\n"; }

std::string to_table(const Json &document) {
  std::ostringstream out;
  for (auto it = document.begin(); it != document.end(); ++it) {
    if (it.key() == "schema")
      continue;
    table_line(out, it.key(), it.value());
  }
  return out.str();
}

} // namespace hlnet::io

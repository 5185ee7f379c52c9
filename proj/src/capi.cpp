#include "hlnet/hlnet.h"

#include "hlnet/dihedral.hpp"
#include "hlnet/error.hpp"
#include "hlnet/extra_connectivity.hpp"
#include "hlnet/graph_ops.hpp"
#include "hlnet/lemmas.hpp"
#include "hlnet/progress.hpp"
#include "hlnet/serialize.hpp"
#include "hlnet/topology.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

struct hlnet_graph {
  hlnet::CompactGraph graph;
  std::string spec;
  std::optional<hlnet::topology::TopologySpec> topology;
};

namespace {

thread_local std::string last_error;

hlnet_status fail(hlnet_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class Body> hlnet_status guarded(Body &&body) {
  try {
    last_error.clear();
    return body();
  } catch (const hlnet::Error &e) {
    switch (e.code()) {
    case hlnet::ErrorCode::invalid_argument:
      return fail(HLNET_INVALID_ARGUMENT, e.what());
    case hlnet::ErrorCode::not_index_two:
      return fail(HLNET_NOT_INDEX_TWO, e.what());
    case hlnet::ErrorCode::io:
      return fail(HLNET_IO_ERROR, e.what());
    case hlnet::ErrorCode::budget:
      return fail(HLNET_BOUNDED, e.what());
    }
    return fail(HLNET_INTERNAL, e.what());
  } catch (const std::bad_alloc &) {
    return fail(HLNET_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(HLNET_INTERNAL, e.what());
  }
}

char *copy_out(const std::string &text) {
  char *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (out == nullptr)
    throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::string render(const hlnet::Json &doc, hlnet_format format) {
  switch (format) {
  case HLNET_FORMAT_JSON:
    return hlnet::io::dump(doc);
  case HLNET_FORMAT_TABLE:
    return hlnet::io::to_table(doc);
  default:
    hlnet::fail_argument("this document supports the json and table formats only");
  }
}

hlnet::io::Format to_format(hlnet_format format) {
  switch (format) {
  case HLNET_FORMAT_JSON:
    return hlnet::io::Format::json;
  case HLNET_FORMAT_DOT:
    return hlnet::io::Format::dot;
  case HLNET_FORMAT_EDGELIST:
    return hlnet::io::Format::edgelist;
  case HLNET_FORMAT_TABLE:
    return hlnet::io::Format::table;
  }
  hlnet::fail_argument("unknown format");
}

hlnet_status report_status(const hlnet::VerificationReport &r) {
  switch (r.status) {
  case hlnet::ReportStatus::verified:
    return HLNET_OK;
  case hlnet::ReportStatus::refuted:
    return HLNET_REFUTED;
  case hlnet::ReportStatus::bounded:
    break;
  }
  return HLNET_BOUNDED;
}

void require(bool condition, const char *what) {
  if (!condition)
    hlnet::fail_argument(what);
}

/// f_n(g) lower bound for HL-network specs with n >= 5 and 0 <= g <= n-3.
std::optional<std::int64_t> cited_bound(const hlnet_graph &h, int g) {
  if (!h.topology)
    return std::nullopt;
  const int n = h.topology->dimension();
  if (n < 5 || g < 0 || g > n - 3)
    return std::nullopt;
  return hlnet::extra::f_value(n, g);
}

} // namespace

extern "C" {

const char *hlnet_version(void) { return "1.0.0"; }

const char *hlnet_last_error(void) { return last_error.c_str(); }

const char *hlnet_status_name(hlnet_status status) {
  switch (status) {
  case HLNET_OK:
    return "ok";
  case HLNET_REFUTED:
    return "refuted";
  case HLNET_INVALID_ARGUMENT:
    return "invalid-argument";
  case HLNET_IO_ERROR:
    return "io-error";
  case HLNET_BOUNDED:
    return "bounded";
  case HLNET_NOT_INDEX_TWO:
    return "not-index-two";
  case HLNET_INTERNAL:
    break;
  }
  return "internal";
}

void hlnet_string_free(char *text) { std::free(text); }

void hlnet_set_progress_callback(hlnet_progress_fn callback, void *user) {
  hlnet::set_progress_sink(callback, user);
}

hlnet_status hlnet_graph_from_spec(const char *spec, hlnet_graph **out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto parsed = hlnet::topology::TopologySpec::parse(spec);
    auto handle = std::make_unique<hlnet_graph>();
    handle->graph = hlnet::topology::build(parsed);
    handle->spec = parsed.canonical();
    handle->topology = std::move(parsed);
    *out = handle.release();
    return HLNET_OK;
  });
}

hlnet_status hlnet_graph_from_json(const char *document, hlnet_graph **out) {
  return guarded([&] {
    require(document != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto loaded = hlnet::io::graph_from_json(document);
    auto handle = std::make_unique<hlnet_graph>();
    handle->graph = std::move(loaded.graph);
    handle->spec = std::move(loaded.spec);
    *out = handle.release();
    return HLNET_OK;
  });
}

void hlnet_graph_free(hlnet_graph *graph) { delete graph; }

size_t hlnet_graph_order(const hlnet_graph *graph) { return graph == nullptr ? 0 : graph->graph.order(); }

size_t hlnet_graph_edge_count(const hlnet_graph *graph) { return graph == nullptr ? 0 : graph->graph.edge_count(); }

const char *hlnet_graph_spec(const hlnet_graph *graph) { return graph == nullptr ? "" : graph->spec.c_str(); }

hlnet_status hlnet_graph_girth(const hlnet_graph *graph, size_t *out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = hlnet::girth(graph->graph).value_or(0);
    return HLNET_OK;
  });
}

hlnet_status hlnet_graph_neighborhood_size(const hlnet_graph *graph, const uint32_t *vertices, size_t count,
                                           size_t *out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr && (vertices != nullptr || count == 0), "null argument");
    const auto set =
        hlnet::VertexSet::of(graph->graph.order(), std::span<const hlnet::Vertex>(vertices, count));
    *out = hlnet::neighborhood(graph->graph, set).count();
    return HLNET_OK;
  });
}

hlnet_status hlnet_graph_serialize(const hlnet_graph *graph, hlnet_format format, char **out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = copy_out(hlnet::io::write_graph(graph->graph, graph->spec, to_format(format)));
    return HLNET_OK;
  });
}

hlnet_status hlnet_f_value(int64_t n, int64_t g, int64_t *out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = hlnet::extra::f_value(n, g);
    return HLNET_OK;
  });
}

void hlnet_kappa_options_init(hlnet_kappa_options *options) {
  if (options == nullptr)
    return;
  *options = hlnet_kappa_options{};
  options->mode = HLNET_KAPPA_EXACT;
  options->format = HLNET_FORMAT_JSON;
}

hlnet_status hlnet_kappa(const hlnet_graph *graph, const hlnet_kappa_options *options, char **out) {
  return guarded([&] {
    require(graph != nullptr && options != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    require(options->g >= 0, "g must be non-negative");
    require(options->format == HLNET_FORMAT_JSON || options->format == HLNET_FORMAT_TABLE,
            "certificates support the json and table formats only");
    const auto &g = graph->graph;
    hlnet::Stopwatch clock;
    hlnet::io::CertificateContext context;
    context.spec = graph->spec;
    hlnet::extra::CutsetCertificate cert;
    const hlnet::extra::SearchOptions search{options->threads};

    switch (options->mode) {
    case HLNET_KAPPA_EXACT: {
      context.mode = "exact";
      if (g.order() > 64 && options->force == 0)
        hlnet::fail_argument("exact search is limited to 64 vertices; pass force to override");
      const auto cap = options->max_cardinality == 0 ? g.order() : options->max_cardinality;
      cert = hlnet::extra::exact_extra_connectivity(g, options->g, cap, search);
      break;
    }
    case HLNET_KAPPA_UPPER: {
      context.mode = "upper";
      const auto cap = options->size_cap == 0 ? static_cast<std::size_t>(options->g) + 1 : options->size_cap;
      cert = hlnet::extra::upper_bound_by_small_side(g, options->g, cap, search);
      break;
    }
    case HLNET_KAPPA_STAR_UPPER: {
      context.mode = "star-upper";
      require(graph->topology && graph->topology->is_cayley(), "star-upper mode needs a gamma or delta topology");
      const auto [k, l] = graph->topology->group_shape();
      const auto gens = hlnet::group::generating_set(k, l);
      const auto star = hlnet::extra::min_star_neighborhood(gens, g, options->g);
      cert.kind = hlnet::extra::CertificateKind::upper_bound;
      cert.extra = options->g;
      cert.budget = {{"leafSets", star.leaf_sets}};
      context.extra["starSets"] = star.star_sets;
      if (star.value) {
        for (auto i : star.leaves)
          context.leaf_names.push_back(gens.names[i]);
        const auto side = hlnet::VertexSet::of(g.order(), star.star);
        const auto cut = hlnet::neighborhood(g, side);
        cert.witness = star.star;
        cert.cutset = cut.members();
        cert.component_sizes = hlnet::component_sizes(g, cut);
        context.extra["starNeighborhood"] = *star.value;
        context.extra["cutsetIsRg"] = star.cutset_valid;
        if (star.cutset_valid)
          cert.value = star.value;
      }
      if (!cert.value)
        cert.outcome = hlnet::extra::SearchOutcome::bounded;
      break;
    }
    default:
      hlnet::fail_argument("unknown kappa mode");
    }
    context.cited_lower_bound = cited_bound(*graph, options->g);
    std::optional<double> elapsed;
    if (options->include_timing != 0)
      elapsed = clock.elapsed_ms();
    *out = copy_out(render(hlnet::io::certificate_json(cert, context, elapsed), options->format));
    return cert.outcome == hlnet::extra::SearchOutcome::definitive ? HLNET_OK : HLNET_BOUNDED;
  });
}

void hlnet_run_options_init(hlnet_run_options *options) {
  if (options == nullptr)
    return;
  *options = hlnet_run_options{};
  options->format = HLNET_FORMAT_JSON;
}

hlnet_status hlnet_verify(const char *claim, const char *params_json, const hlnet_run_options *options,
                          char **out) {
  return guarded([&] {
    require(claim != nullptr && options != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    hlnet::Json params = hlnet::Json::object();
    if (params_json != nullptr && *params_json != '\0') {
      try {
        params = hlnet::Json::parse(params_json);
      } catch (const hlnet::Json::parse_error &e) {
        hlnet::fail_argument(std::string("parameters are not valid JSON: ") + e.what());
      }
    }
    const auto report = hlnet::verify::run_claim(claim, params, {options->threads});
    *out = copy_out(render(hlnet::io::report_json(report, options->include_timing != 0), options->format));
    return report_status(report);
  });
}

hlnet_status hlnet_decompose(int k, int l, const hlnet_run_options *options, char **out) {
  return guarded([&] {
    require(options != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const auto report = hlnet::verify::run_claim("lemma-hl-decompose", {{"k", k}, {"l", l}}, {options->threads});
    *out = copy_out(render(hlnet::io::report_json(report, options->include_timing != 0), options->format));
    return report_status(report);
  });
}

size_t hlnet_claim_count(void) { return hlnet::verify::claims().size(); }

const char *hlnet_claim_id(size_t index) {
  const auto &c = hlnet::verify::claims();
  return index < c.size() ? c[index].id.c_str() : nullptr;
}

const char *hlnet_claim_summary(size_t index) {
  const auto &c = hlnet::verify::claims();
  return index < c.size() ? c[index].summary.c_str() : nullptr;
}

const char *hlnet_claim_parameters(size_t index) {
  const auto &c = hlnet::verify::claims();
  return index < c.size() ? c[index].parameters.c_str() : nullptr;
}

} // extern "C"

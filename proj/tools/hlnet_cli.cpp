// hlnet command-line front end. Talks to the library through the C API only.

#include "hlnet/hlnet.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_usage = 2;
constexpr int exit_io = 3;
constexpr int exit_internal = 5;

int exit_code(hlnet_status status) {
  switch (status) {
  case HLNET_OK:
    return 0;
  case HLNET_REFUTED:
    return 1;
  case HLNET_INVALID_ARGUMENT:
  case HLNET_NOT_INDEX_TWO:
    return exit_usage;
  case HLNET_IO_ERROR:
    return exit_io;
  case HLNET_BOUNDED:
    return 4;
  case HLNET_INTERNAL:
    break;
  }
  return exit_internal;
}

int report_error(hlnet_status status) {
  std::cerr << "hlnet: " << hlnet_status_name(status) << ": " << hlnet_last_error() << '\n';
  return exit_code(status);
}

/// Relative output paths resolve against $HLNET_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string &path) {
  std::filesystem::path p(path);
  const char *dir = std::getenv("HLNET_OUTPUT_DIR");
  if (p.is_relative() && dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir) / p;
  return p;
}

/// Writes `text` to the output file or stdout; returns an exit code.
int emit(const std::string &text, const std::string &output) {
  if (output.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : exit_io;
  }
  const auto path = output_path(output);
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    std::cerr << "hlnet: cannot write " << path.string() << '\n';
    return exit_io;
  }
  return 0;
}

/// Emits the library-owned string and frees it; `status` decides the exit code.
int finish(hlnet_status status, char *text, const std::string &output) {
  if (text == nullptr)
    return report_error(status);
  const int written = emit(text, output);
  hlnet_string_free(text);
  return written != 0 ? written : exit_code(status);
}

hlnet_format format_of(const std::string &name) {
  if (name == "dot")
    return HLNET_FORMAT_DOT;
  if (name == "edgelist")
    return HLNET_FORMAT_EDGELIST;
  if (name == "table")
    return HLNET_FORMAT_TABLE;
  return HLNET_FORMAT_JSON;
}

/// "hypercube n=3" and "hypercube:n=3" name the same topology.
std::string join_spec(const std::vector<std::string> &words) {
  if (words.empty())
    return {};
  std::string spec = words.front();
  for (std::size_t i = 1; i < words.size(); ++i)
    spec += (i == 1 && spec.find(':') == std::string::npos ? ":" : ",") + words[i];
  return spec;
}

void progress_to_stderr(const char *message, void *) { std::cerr << "[hlnet] " << message << '\n'; }

struct GenArgs {
  std::vector<std::string> words;
  std::string topology;
  std::string format = "json";
  std::string output;
};

struct KappaArgs {
  std::string topology;
  std::string graph;
  int g = 0;
  std::string mode = "exact";
  std::size_t max_card = 0;
  std::size_t size_cap = 0;
  bool force = false;
  unsigned threads = 0;
  std::string format = "json";
  std::string output;
  bool timing = false;
};

struct VerifyArgs {
  std::string claim;
  std::vector<std::string> params;
  unsigned threads = 0;
  std::string seed;
  std::string format = "json";
  std::string output;
  bool timing = false;
};

int run_gen(const GenArgs &args) {
  const std::string spec = !args.topology.empty() ? args.topology : join_spec(args.words);
  if (spec.empty()) {
    std::cerr << "hlnet: gen needs a topology (e.g. 'hypercube n=3' or --topology hypercube:n=3)\n";
    return exit_usage;
  }
  hlnet_graph *graph = nullptr;
  if (auto status = hlnet_graph_from_spec(spec.c_str(), &graph); status != HLNET_OK)
    return report_error(status);
  char *text = nullptr;
  const auto status = hlnet_graph_serialize(graph, format_of(args.format), &text);
  hlnet_graph_free(graph);
  return finish(status, text, args.output);
}

int run_f(long long n, const std::vector<long long> &g, bool table) {
  std::ostringstream out;
  if (table) {
    out << "g\tf_" << n << "(g)\n";
    for (long long x = 0; x <= n; ++x) {
      int64_t value = 0;
      if (auto status = hlnet_f_value(n, x, &value); status != HLNET_OK)
        return report_error(status);
      out << x << '\t' << value << '\n';
    }
  } else {
    if (g.size() != 1) {
      std::cerr << "hlnet: f needs N and G (or --table)\n";
      return exit_usage;
    }
    int64_t value = 0;
    if (auto status = hlnet_f_value(n, g.front(), &value); status != HLNET_OK)
      return report_error(status);
    out << value << '\n';
  }
  return emit(out.str(), "");
}

int run_kappa(const KappaArgs &args) {
  if (args.topology.empty() == args.graph.empty()) {
    std::cerr << "hlnet: kappa needs exactly one of --topology and --graph\n";
    return exit_usage;
  }
  hlnet_graph *graph = nullptr;
  hlnet_status status = HLNET_OK;
  if (!args.topology.empty()) {
    status = hlnet_graph_from_spec(args.topology.c_str(), &graph);
  } else {
    std::ifstream file(args.graph, std::ios::binary);
    if (!file) {
      std::cerr << "hlnet: cannot read " << args.graph << '\n';
      return exit_io;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    status = hlnet_graph_from_json(buffer.str().c_str(), &graph);
  }
  if (status != HLNET_OK)
    return report_error(status);

  hlnet_kappa_options options;
  hlnet_kappa_options_init(&options);
  options.g = args.g;
  options.mode = args.mode == "upper"        ? HLNET_KAPPA_UPPER
                 : args.mode == "star-upper" ? HLNET_KAPPA_STAR_UPPER
                                             : HLNET_KAPPA_EXACT;
  options.max_cardinality = args.max_card;
  options.size_cap = args.size_cap;
  options.force = args.force ? 1 : 0;
  options.threads = args.threads;
  options.include_timing = args.timing ? 1 : 0;
  options.format = format_of(args.format);
  char *text = nullptr;
  status = hlnet_kappa(graph, &options, &text);
  hlnet_graph_free(graph);
  return finish(status, text, args.output);
}

int run_verify(const VerifyArgs &args) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto &p : args.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "hlnet: parameter '" << p << "' is not key=value\n";
      return exit_usage;
    }
    params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  if (!args.seed.empty())
    params["seed"] = args.seed;
  hlnet_run_options options;
  hlnet_run_options_init(&options);
  options.threads = args.threads;
  options.include_timing = args.timing ? 1 : 0;
  options.format = format_of(args.format);
  char *text = nullptr;
  const auto status = hlnet_verify(args.claim.c_str(), params.dump().c_str(), &options, &text);
  return finish(status, text, args.output);
}

int run_decompose(int k, int l, const VerifyArgs &args) {
  hlnet_run_options options;
  hlnet_run_options_init(&options);
  options.threads = args.threads;
  options.include_timing = args.timing ? 1 : 0;
  options.format = format_of(args.format);
  char *text = nullptr;
  const auto status = hlnet_decompose(k, l, &options, &text);
  return finish(status, text, args.output);
}

std::string claims_help() {
  std::string out = "claims:\n";
  for (std::size_t i = 0; i < hlnet_claim_count(); ++i)
    out += std::string("  ") + hlnet_claim_id(i) + "\n      " + hlnet_claim_summary(i) + "\n      defaults: " +
           hlnet_claim_parameters(i) + "\n";
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"hlnet: hypercube-like networks and g-extra connectivity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(hlnet_version()));
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress progress messages on stderr");

  const std::vector<std::string> formats{"json", "dot", "edgelist", "table"};
  const std::vector<std::string> document_formats{"json", "table"};

  GenArgs gen;
  auto *gen_cmd = app.add_subcommand("gen", "Build a topology and write it out");
  gen_cmd->add_option("spec", gen.words, "Topology, e.g. 'hypercube n=3' or gamma:k=1,l=0");
  gen_cmd->add_option("-t,--topology", gen.topology, "Topology spec string");
  gen_cmd->add_option("-f,--format", gen.format, "Output format")->check(CLI::IsMember(formats));
  gen_cmd->add_option("-o,--output", gen.output, "Output file (relative to $HLNET_OUTPUT_DIR if set)");

  long long f_n = 0;
  std::vector<long long> f_g;
  bool f_table = false;
  auto *f_cmd = app.add_subcommand("f", "Print f_n(g) = n(g+1) - g(g+3)/2");
  f_cmd->add_option("n", f_n, "Dimension")->required();
  f_cmd->add_option("g", f_g, "Extra parameter")->expected(0, 1);
  f_cmd->add_flag("--table", f_table, "Print f_n(0..n)");

  KappaArgs kappa;
  auto *kappa_cmd = app.add_subcommand("kappa", "Certify g-extra connectivity");
  kappa_cmd->add_option("-t,--topology", kappa.topology, "Topology spec string");
  kappa_cmd->add_option("--graph", kappa.graph, "Graph JSON file");
  kappa_cmd->add_option("-g,--g", kappa.g, "Extra parameter g")->required()->check(CLI::NonNegativeNumber);
  kappa_cmd->add_option("-m,--mode", kappa.mode, "exact | upper | star-upper")
      ->check(CLI::IsMember({"exact", "upper", "star-upper"}));
  kappa_cmd->add_option("--max-card", kappa.max_card, "Largest cutset size searched in exact mode");
  kappa_cmd->add_option("--size-cap", kappa.size_cap, "Largest small side in upper mode (default g+1)");
  kappa_cmd->add_flag("--force", kappa.force, "Allow exact search above 64 vertices");
  kappa_cmd->add_option("-j,--threads", kappa.threads, "Worker threads (0 = all cores)");
  kappa_cmd->add_option("-f,--format", kappa.format, "json | table")->check(CLI::IsMember(document_formats));
  kappa_cmd->add_option("-o,--output", kappa.output, "Output file");
  kappa_cmd->add_flag("--timing", kappa.timing, "Include elapsedMillis (output is then not reproducible)");

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Check a claim and emit a report");
  verify_cmd->footer(claims_help());
  verify_cmd->add_option("claim", verify.claim, "Claim id (see 'hlnet claims')")->required();
  verify_cmd->add_option("params", verify.params, "key=value parameters; ranges as a..b, lists with ';'");
  verify_cmd->add_option("-j,--threads", verify.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("-s,--seed", verify.seed, "Seed for randomized claims");
  verify_cmd->add_option("-f,--format", verify.format, "json | table")->check(CLI::IsMember(document_formats));
  verify_cmd->add_option("-o,--output", verify.output, "Output file");
  verify_cmd->add_flag("--timing", verify.timing, "Include elapsedMillis (output is then not reproducible)");

  int dk = 0;
  int dl = 0;
  VerifyArgs decompose;
  auto *decompose_cmd = app.add_subcommand("decompose", "Split Gamma_{k,l} into two halves and a perfect matching");
  decompose_cmd->add_option("k", dk, "Dihedral factors")->required();
  decompose_cmd->add_option("l", dl, "Cyclic factors")->required();
  decompose_cmd->add_option("-j,--threads", decompose.threads, "Worker threads");
  decompose_cmd->add_option("-f,--format", decompose.format, "json | table")
      ->check(CLI::IsMember(document_formats));
  decompose_cmd->add_option("-o,--output", decompose.output, "Output file");
  decompose_cmd->add_flag("--timing", decompose.timing, "Include elapsedMillis");

  auto *claims_cmd = app.add_subcommand("claims", "List claim ids and their default parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_usage;
  }

  if (!quiet)
    hlnet_set_progress_callback(progress_to_stderr, nullptr);

  if (gen_cmd->parsed())
    return run_gen(gen);
  if (f_cmd->parsed())
    return run_f(f_n, f_g, f_table);
  if (kappa_cmd->parsed())
    return run_kappa(kappa);
  if (verify_cmd->parsed())
    return run_verify(verify);
  if (decompose_cmd->parsed())
    return run_decompose(dk, dl, decompose);
  if (claims_cmd->parsed())
    return emit(claims_help(), "");
  return exit_usage;
}

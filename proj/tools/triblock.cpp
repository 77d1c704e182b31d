#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "triblock/blocks.hpp"
#include "triblock/constructions.hpp"
#include "triblock/contribution.hpp"
#include "triblock/error.hpp"
#include "triblock/oracle.hpp"
#include "triblock/patterns.hpp"
#include "triblock/plane_graph.hpp"
#include "triblock/report.hpp"

using namespace triblock;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;
constexpr int kStructural = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format " + format);
}

int run_decompose(const std::string& input, const std::string& format) {
  require_format(format, {"json", "text"});
  const PlaneGraph pg = read_plane_graph_any(slurp(input));
  const Decomposition d = decompose(pg);
  if (format == "json") {
    std::cout << dump(decomposition_json(pg, d));
    return kOk;
  }
  std::cout << "n=" << pg.order() << " m=" << pg.size() << " faces=" << pg.num_faces()
            << " blocks=" << d.blocks.size() << "\n";
  for (const auto& b : d.blocks) {
    std::cout << b.id << "\t" << to_string(b.label) << "\tedges=" << b.edges.size()
              << "\tinterior_faces=" << b.interior_faces.size() << "\n";
  }
  return kOk;
}

int run_certify(const std::string& input, const std::string& target, bool check_free,
                const std::string& format) {
  require_format(format, {"json", "text"});
  const BoundSpec spec = bound_spec(target);
  const PlaneGraph pg = read_plane_graph_any(slurp(input));
  const Certificate cert = certify(pg, spec, {check_free});
  if (format == "json") {
    std::cout << dump(certificate_json(cert));
  } else {
    std::cout << "target=" << spec.name << " n=" << cert.n << " m=" << cert.m
              << " identities_ok=" << cert.identities_ok
              << " all_nonpositive=" << cert.all_nonpositive
              << " bound_holds=" << cert.bound_holds << "\n";
    for (const auto& c : cert.clustering.clusters) {
      std::cout << c.id << "\t" << to_string(c.kind) << "\tg=" << to_string(c.g) << "\n";
    }
  }
  if (!cert.all_nonpositive) return kViolation;
  return cert.identities_ok && cert.bound_holds ? kOk : kViolation;
}

int run_check_free(const std::string& input, const std::string& pattern_name) {
  const PatternSet patterns = parse_pattern(pattern_name);
  const PlaneGraph pg = read_plane_graph_any(slurp(input));
  const auto match = find_pattern(pg.graph(), patterns);
  std::cout << dump(match_json(patterns, match));
  return match ? kViolation : kOk;
}

int run_construct(int k, const std::string& out, bool skeleton_only, bool verify,
                  const std::string& format) {
  require_format(format, {"native", "dot", "json"});
  if (verify) {
    const ExtremalReport report = verify_extremal(k);
    std::cout << dump(extremal_json(report));
    return report.ok() ? kOk : kViolation;
  }
  const SkeletonGraph skeleton = build_skeleton(k);
  const PlaneGraph pg = skeleton_only ? skeleton.plane_graph : substitute_b5a(skeleton);
  const std::string comment = (skeleton_only ? "skeleton k=" : "extremal k=") + std::to_string(k);
  if (format == "native") {
    emit(to_native(pg, comment), out);
  } else if (format == "dot") {
    emit(export_dot(pg), out);
  } else {
    emit(dump(decomposition_json(pg, decompose(pg))), out);
  }
  return kOk;
}

int run_oracle(int n, const std::string& pattern_name, const OracleOptions& options,
               const std::string& witnesses_path, const std::string& format, bool timing) {
  require_format(format, {"json", "text"});
  const PatternSet patterns = parse_pattern(pattern_name);
  const OracleResult result = max_edges(n, patterns, options);
  if (format == "json") {
    std::cout << dump(oracle_json(result, timing));
  } else {
    std::cout << "n\tpattern\tmax_edges\tclasses\texplored\n"
              << result.n << "\t" << result.pattern << "\t" << result.max_edges << "\t"
              << result.witness_classes << "\t" << result.explored << "\n";
    if (timing) std::cout << "timing: " << result.elapsed.count() << " s\n";
  }
  if (!witnesses_path.empty()) {
    std::string text;
    int index = 0;
    for (const Graph& g : result.witnesses) {
      text += to_native(planar_embedding(g),
                        "witness " + std::to_string(index++) + " of ex_P(" + std::to_string(n) +
                            ", " + result.pattern + ") = " + std::to_string(result.max_edges) +
                            "; abstract graph, embedding chosen arbitrarily");
    }
    emit(text, witnesses_path);
  }
  return kOk;
}

int run_export(const std::string& input, const std::string& format) {
  require_format(format, {"dot", "native"});
  const PlaneGraph pg = read_plane_graph_any(slurp(input));
  std::cout << (format == "dot" ? export_dot(pg) : to_native(pg));
  return kOk;
}

int run_catalog(const std::string& format) {
  require_format(format, {"json", "text"});
  if (format == "json") {
    std::cout << dump(catalog_json());
    return kOk;
  }
  for (const auto& entry : catalog()) {
    std::cout << to_string(entry.label) << ":" << entry.drawing.size() << "/"
              << entry.edges.size() << "\n";
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidName:
    case ErrorKind::ParameterOutOfRange:
    case ErrorKind::CapExceeded:
      return kUsage;
    default:
      return kStructural;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular-block certificates for planar Theta6 Turan bounds"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format;
  std::string target;
  std::string pattern;
  std::string out;
  std::string witnesses;
  bool check_free = false;
  bool skeleton_only = false;
  bool verify = false;
  bool timing = false;
  int k = 0;
  int n = 0;
  OracleOptions oracle_options;

  auto* decompose_cmd = app.add_subcommand("decompose", "Triangular block decomposition");
  decompose_cmd->add_option("input", input, "planegraph file or decomposition JSON, - for stdin");
  decompose_cmd->add_option("--format", format, "json | text")->default_str("json");

  auto* certify_cmd = app.add_subcommand("certify", "Cluster contributions against a bound");
  certify_cmd->add_option("input", input, "planegraph file or decomposition JSON, - for stdin");
  certify_cmd->add_option("--target", target, "theta6-1 | theta6-2")->required();
  certify_cmd->add_flag("--check-free", check_free, "also test pattern freeness");
  certify_cmd->add_option("--format", format, "json | text")->default_str("json");

  auto* free_cmd = app.add_subcommand("check-free", "Search for a forbidden subgraph");
  free_cmd->add_option("input", input, "planegraph file or decomposition JSON, - for stdin");
  free_cmd->add_option("--pattern", pattern, "theta6-1 | theta6-2 | theta:k:d | theta-family:k")
      ->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build the k-th extremal graph");
  construct_cmd->add_option("--k", k, "family index")->required()->check(CLI::NonNegativeNumber);
  construct_cmd->add_option("--out", out, "output path (default stdout)");
  construct_cmd->add_flag("--skeleton-only", skeleton_only, "stop before B5a substitution");
  construct_cmd->add_flag("--verify", verify, "run the extremal checks and print a report");
  construct_cmd->add_option("--format", format, "native | dot | json")->default_str("native");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive planar Turan number");
  oracle_cmd->add_option("--n", n, "vertex count")->required();
  oracle_cmd->add_option("--pattern", pattern, "pattern name")->required();
  oracle_cmd->add_option("--jobs", oracle_options.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--cap", oracle_options.cap, "largest n without --force");
  oracle_cmd->add_flag("--force", oracle_options.force, "allow n above the cap");
  oracle_cmd->add_option("--witness-cap", oracle_options.witness_cap, "witnesses kept")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--witnesses", witnesses, "write witnesses in planegraph format");
  oracle_cmd->add_option("--format", format, "text | json")->default_str("text");
  oracle_cmd->add_flag("--timing", timing, "report elapsed time");

  auto* export_cmd = app.add_subcommand("export", "Convert a planegraph");
  export_cmd->add_option("input", input, "planegraph file or decomposition JSON, - for stdin");
  export_cmd->add_option("--format", format, "dot | native")->default_str("dot");

  auto* catalog_cmd = app.add_subcommand("catalog", "List the admissible blocks");
  catalog_cmd->add_option("--format", format, "text | json")->default_str("text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto fmt = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };
  try {
    if (*decompose_cmd) return run_decompose(input, fmt("json"));
    if (*certify_cmd) return run_certify(input, target, check_free, fmt("json"));
    if (*free_cmd) return run_check_free(input, pattern);
    if (*construct_cmd) return run_construct(k, out, skeleton_only, verify, fmt("native"));
    if (*oracle_cmd) return run_oracle(n, pattern, oracle_options, witnesses, fmt("text"), timing);
    if (*export_cmd) return run_export(input, fmt("dot"));
    if (*catalog_cmd) return run_catalog(fmt("text"));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

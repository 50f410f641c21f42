#include "blochgeom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "blochgeom/antipode.hpp"
#include "blochgeom/basis.hpp"
#include "blochgeom/direction.hpp"
#include "blochgeom/errors.hpp"
#include "blochgeom/io.hpp"
#include "blochgeom/manifest.hpp"
#include "blochgeom/sampling.hpp"
#include "blochgeom/scan.hpp"
#include "blochgeom/stratification.hpp"

namespace blochgeom::cli {

namespace {

using io::csv_row;
using io::format_bool;
using io::format_real;
using nlohmann::json;

struct GlobalOptions {
  std::string format;
  double zero_tol = tol::kZero;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

std::string format_or(const GlobalOptions& g, const char* fallback) {
  return g.format.empty() ? fallback : g.format;
}

std::uint64_t require_seed(const GlobalOptions& g, const char* command) {
  if (!g.seed) throw DomainError(std::string(command) + " requires an explicit --seed");
  return *g.seed;
}

void emit_json(std::ostream& out, const RunManifest& manifest, json body) {
  body["manifest"] = manifest.to_json();
  out << body.dump(2) << '\n';
}

// -- basis -------------------------------------------------------------------

struct BasisArgs {
  int dim = 0;
};

void cmd_basis(const BasisArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::string format = format_or(g, "json");
  const BasisSet basis = build_basis(a.dim);
  const RunManifest manifest = RunManifest::begin("basis", {{"dim", a.dim}, {"format", format}});
  if (format == "json") {
    json elements = json::array();
    for (const ComplexMatrix& e : basis.elements()) {
      json pairs = json::array();
      for (int r = 0; r < a.dim; ++r) {
        for (int c = 0; c < a.dim; ++c) pairs.push_back({e(r, c).real(), e(r, c).imag()});
      }
      elements.push_back(std::move(pairs));
    }
    emit_json(out, manifest, {{"dim", a.dim}, {"count", basis.size()}, {"elements", elements}});
    return;
  }
  out << manifest.csv_comment() << '\n';
  std::vector<std::string> header{"index"};
  for (int r = 0; r < a.dim; ++r) {
    for (int c = 0; c < a.dim; ++c) {
      header.push_back("re_" + std::to_string(r) + "_" + std::to_string(c));
      header.push_back("im_" + std::to_string(r) + "_" + std::to_string(c));
    }
  }
  out << csv_row(header) << '\n';
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<std::string> row{std::to_string(j)};
    for (int r = 0; r < a.dim; ++r) {
      for (int c = 0; c < a.dim; ++c) {
        row.push_back(format_real(basis[j](r, c).real()));
        row.push_back(format_real(basis[j](r, c).imag()));
      }
    }
    out << csv_row(row) << '\n';
  }
}

// -- convert -----------------------------------------------------------------

struct ConvertArgs {
  std::string input;
  std::string to;
};

void cmd_convert(const ConvertArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (format_or(g, "json") != "json") throw DomainError("convert emits JSON only");
  const json doc = io::read_json_file(a.input);
  if (!doc.is_object()) throw DomainError("convert: input must be a JSON object");
  std::string to = a.to;
  if (to.empty()) to = doc.contains("coords") ? "matrix" : "bloch";
  const RunManifest manifest = RunManifest::begin("convert", {{"input", a.input}, {"to", to}});
  if (to == "bloch") {
    const HermitianMatrix m = io::matrix_from_json(doc);
    emit_json(out, manifest, io::bloch_to_json(to_bloch(build_basis(m.dim()), m)));
  } else {
    const BlochVector v = io::bloch_from_json(doc);
    const HermitianMatrix m = from_bloch(build_basis(v.dim()), v);
    emit_json(out, manifest, io::matrix_to_json(m.matrix()));
  }
}

// -- classify ----------------------------------------------------------------

struct ClassifyArgs {
  std::string state;
};

void cmd_classify(const ClassifyArgs& a, const GlobalOptions& g, std::ostream& out) {
  const HermitianMatrix m = io::matrix_from_json(io::read_json_file(a.state));
  const RunManifest manifest =
      RunManifest::begin("classify", {{"state", a.state}, {"zero_tol", g.zero_tol}});
  const StateClass c = classify(m, g.zero_tol);
  const Spectrum s = spectrum(m, g.zero_tol);
  json body;
  if (c.kind() == StateClass::Kind::Nonpositive) {
    body = json{{"dim", m.dim()}, {"lambda_min", s.min()}};
  } else {
    body = io::to_json(stratum_report(DensityMatrix(m), g.zero_tol));
  }
  json values = json::array();
  for (Eigen::Index k = 0; k < s.values.size(); ++k) values.push_back(s.values(k));
  body["spectrum"] = values;
  body["class"] = io::to_json(c);
  if (format_or(g, "json") == "csv") {
    if (c.kind() == StateClass::Kind::Nonpositive) {
      throw DomainError("classify: CSV stratum report needs a positive semidefinite state");
    }
    out << manifest.csv_comment() << '\n' << io::kStratumCsvHeader << '\n'
        << io::stratum_csv_row(stratum_report(DensityMatrix(m), g.zero_tol)) << '\n';
    return;
  }
  emit_json(out, manifest, body);
}

// -- strata-scan -------------------------------------------------------------

struct ScanArgs {
  int dim = 0;
  std::size_t count = 0;
  unsigned threads = 1;
};

void cmd_strata_scan(const ScanArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::uint64_t seed = require_seed(g, "strata-scan");
  const RunManifest manifest = RunManifest::begin(
      "strata-scan", {{"dim", a.dim}, {"count", a.count}, {"zero_tol", g.zero_tol}}, seed);
  const StrataScanResult result = strata_scan(a.dim, a.count, seed, a.threads, g.zero_tol);
  out << manifest.csv_comment() << '\n' << io::kStratumCsvHeader << '\n';
  for (const StrataScanRow& row : result.rows) out << io::stratum_csv_row(row.report) << '\n';
  if (a.count == 0) return;
  for (const RankSummary& s : result.summary) {
    out << "# summary rank=" << s.rank << " expected_p=" << s.expected_p << " count=" << s.count
        << " min_slack=" << format_real(s.min_slack) << " violations=" << s.violations
        << " zero_count_mismatches=" << s.zero_count_mismatches << '\n';
  }
}

// -- direction ---------------------------------------------------------------

struct DirectionArgs {
  int dim = 0;
  std::string vector_file;
  std::uint64_t index = 0;
  std::optional<std::size_t> scan;
  unsigned threads = 1;
};

void cmd_direction(const DirectionArgs& a, const GlobalOptions& g, std::ostream& out) {
  const BasisSet basis = build_basis(a.dim);
  if (a.scan) {
    const std::uint64_t seed = require_seed(g, "direction --scan");
    const RunManifest manifest =
        RunManifest::begin("direction", {{"dim", a.dim}, {"scan", *a.scan}}, seed);
    out << manifest.csv_comment() << '\n' << "N,mu_min,mu_max,max_length,cap_zero_count\n";
    for (const DirectionScanRow& r : direction_scan(basis, *a.scan, seed, a.threads)) {
      out << csv_row({std::to_string(a.dim), format_real(r.mu_min), format_real(r.mu_max),
                      format_real(r.max_length), std::to_string(r.cap_zero_count)})
          << '\n';
    }
    return;
  }
  RealVector n;
  json params{{"dim", a.dim}};
  std::optional<std::uint64_t> seed;
  if (!a.vector_file.empty()) {
    const BlochVector v = io::bloch_from_json(io::read_json_file(a.vector_file));
    if (v.dim() != a.dim) throw DomainError("direction: vector dim does not match --dim");
    n = v.coords();
    params["vector"] = a.vector_file;
  } else {
    seed = require_seed(g, "direction");
    n = sample_direction(*seed, static_cast<int>(basis.size()), a.index);
    params["index"] = a.index;
  }
  const RunManifest manifest = RunManifest::begin("direction", params, seed);
  emit_json(out, manifest, io::to_json(direction_report(basis, n)));
}

// -- antipode ----------------------------------------------------------------

struct AntipodeArgs {
  int dim = 0;
  int q = 0;
  std::optional<double> length;
  bool table = false;
  int max_dim = 8;
};

void cmd_antipode(const AntipodeArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (a.table) {
    const RunManifest manifest = RunManifest::begin("antipode", {{"table", true}, {"max_dim", a.max_dim}});
    if (a.max_dim < 2) throw DomainError("antipode --table needs --max-dim >= 2");
    out << manifest.csv_comment() << '\n' << "N,q,max_len,match\n";
    for (int n = 2; n <= a.max_dim; ++n) {
      for (int q = 1; q < n; ++q) {
        const AntipodeReport r = antipode_of_boundary(n, q);
        out << csv_row({std::to_string(n), std::to_string(q), format_real(r.max_antipodal_length),
                        format_bool(r.matches_R_p)})
            << '\n';
      }
    }
    return;
  }
  json params{{"dim", a.dim}, {"q", a.q}};
  if (a.length) params["length"] = *a.length;
  const RunManifest manifest = RunManifest::begin("antipode", params);
  json body = io::to_json(antipode_of_boundary(a.dim, a.q));
  if (a.length) {
    const AntipodalFamilyMember f = antipodal_family(a.dim, a.q, *a.length, g.zero_tol);
    body["family"] = json{{"length", *a.length},
                          {"state", io::matrix_to_json(f.state.matrix())},
                          {"class", io::to_json(f.state_class)}};
  }
  emit_json(out, manifest, body);
}

// -- lemma -------------------------------------------------------------------

struct LemmaArgs {
  std::string tuple_file;
  std::optional<std::size_t> random;
  std::optional<int> n;
};

void cmd_lemma(const LemmaArgs& a, const GlobalOptions& g, std::ostream& out) {
  std::vector<std::vector<double>> tuples;
  json params = json::object();
  std::optional<std::uint64_t> seed;
  if (!a.tuple_file.empty()) {
    json doc = io::read_json_file(a.tuple_file);
    if (doc.is_object() && doc.contains("a")) doc = doc["a"];
    if (!doc.is_array() || doc.empty()) throw DomainError("lemma: tuple file must hold a number array");
    // a single tuple or an array of tuples
    const json list = doc[0].is_array() ? doc : json::array({doc});
    for (const json& t : list) {
      std::vector<double> v;
      for (const json& x : t) {
        if (!x.is_number()) throw DomainError("lemma: non-numeric tuple entry");
        v.push_back(x.get<double>());
      }
      tuples.push_back(std::move(v));
    }
    params["tuple"] = a.tuple_file;
  } else if (a.random) {
    seed = require_seed(g, "lemma --random");
    if (a.n && *a.n < 1) throw DomainError("lemma: --n must be positive");
    for (std::size_t i = 0; i < *a.random; ++i) {
      const int n = a.n ? *a.n : 2 + static_cast<int>(i % 9);
      tuples.push_back(sample_unit_sum_tuple(*seed, n, i));
    }
    params["random"] = *a.random;
    if (a.n) params["n"] = *a.n;
  } else {
    throw DomainError("lemma needs --tuple <file> or --random <count>");
  }
  const RunManifest manifest = RunManifest::begin("lemma", params, seed);
  if (format_or(g, "csv") == "json") {
    json results = json::array();
    for (const auto& t : tuples) {
      json r = io::to_json(harriman_check(t));
      r["n"] = t.size();
      results.push_back(std::move(r));
    }
    emit_json(out, manifest, {{"results", results}});
    return;
  }
  out << manifest.csv_comment() << '\n' << "n,A,bound,slack,equality\n";
  for (const auto& t : tuples) {
    const LemmaResult r = harriman_check(t);
    out << csv_row({std::to_string(t.size()), format_real(r.sum_of_squares), format_real(r.bound),
                    format_real(r.slack), format_bool(r.equality)})
        << '\n';
  }
}

// -- sample ------------------------------------------------------------------

struct SampleArgs {
  int dim = 0;
  int rank = 0;
  std::size_t count = 0;
};

void cmd_sample(const SampleArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::uint64_t seed = require_seed(g, "sample");
  const SamplerConfig cfg{seed, a.dim, a.rank, a.count};
  cfg.validate();
  const std::string format = format_or(g, "json");
  const RunManifest manifest = RunManifest::begin(
      "sample", {{"dim", a.dim}, {"rank", a.rank}, {"count", a.count}, {"format", format}}, seed);
  if (format == "json") {
    json states = json::array();
    for (std::size_t i = 0; i < a.count; ++i) states.push_back(io::matrix_to_json(sample_state(cfg, i).matrix()));
    emit_json(out, manifest, {{"states", states}});
    return;
  }
  out << manifest.csv_comment() << '\n' << io::kStratumCsvHeader << '\n';
  for (std::size_t i = 0; i < a.count; ++i) {
    out << io::stratum_csv_row(stratum_report(sample_state(cfg, i), g.zero_tol)) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bloch-vector geometry of N x N density matrices", "blochgeom"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--zero-tol", g.zero_tol, "Eigenvalue zero tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--out", g.out_path, "Output file (default: standard output)");

  BasisArgs basis_args;
  auto* basis = app.add_subcommand("basis", "Dump the generalized Gell-Mann basis");
  basis->add_option("--dim", basis_args.dim, "Dimension N")->required();

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert between matrix and Bloch JSON");
  convert->add_option("--input", convert_args.input, "Matrix or Bloch JSON file")->required();
  convert->add_option("--to", convert_args.to, "Target representation")
      ->check(CLI::IsMember({"bloch", "matrix"}));

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a state and report its stratum");
  classify_cmd->add_option("--state", classify_args.state, "Matrix JSON file")->required();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("strata-scan", "Monte-Carlo check of the stratification spheres");
  scan->add_option("--dim", scan_args.dim, "Dimension N")->required();
  scan->add_option("--count", scan_args.count, "Samples per rank")->required();
  scan->add_option("--threads", scan_args.threads, "Worker threads")->check(CLI::PositiveNumber);

  DirectionArgs direction_args;
  auto* direction = app.add_subcommand("direction", "Directional representation analysis");
  direction->add_option("--dim", direction_args.dim, "Dimension N")->required();
  auto* vec_opt = direction->add_option("--vector", direction_args.vector_file, "Unit direction JSON file");
  direction->add_option("--index", direction_args.index, "Sample index for --seed");
  direction->add_option("--scan", direction_args.scan, "Number of random directions (CSV)")
      ->excludes(vec_opt);
  direction->add_option("--threads", direction_args.threads, "Worker threads")->check(CLI::PositiveNumber);

  AntipodeArgs antipode_args;
  auto* antipode = app.add_subcommand("antipode", "Antipodes of the boundary states R(q)");
  auto* dim_opt = antipode->add_option("--dim", antipode_args.dim, "Dimension N");
  auto* q_opt = antipode->add_option("--q", antipode_args.q, "Number of nonzero eigenvalues");
  antipode->add_option("--length", antipode_args.length, "Antipodal Bloch length");
  auto* table_flag = antipode->add_flag("--table", antipode_args.table, "Table over all (N, q)");
  antipode->add_option("--max-dim", antipode_args.max_dim, "Largest N in --table");
  dim_opt->excludes(table_flag);
  q_opt->excludes(table_flag);

  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand("lemma", "Sum-of-squares lemma for unit-sum tuples");
  auto* tuple_opt = lemma->add_option("--tuple", lemma_args.tuple_file, "JSON array of reals");
  lemma->add_option("--random", lemma_args.random, "Number of random tuples")->excludes(tuple_opt);
  lemma->add_option("--n", lemma_args.n, "Tuple length for --random (default cycles 2..10)");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Draw rank-constrained random states");
  sample->add_option("--dim", sample_args.dim, "Dimension N")->required();
  sample->add_option("--rank", sample_args.rank, "Rank k")->required();
  sample->add_option("--count", sample_args.count, "Number of states")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitDomain;
  }

  std::ostringstream buffer;
  try {
    if (basis->parsed()) cmd_basis(basis_args, g, buffer);
    else if (convert->parsed()) cmd_convert(convert_args, g, buffer);
    else if (classify_cmd->parsed()) cmd_classify(classify_args, g, buffer);
    else if (scan->parsed()) cmd_strata_scan(scan_args, g, buffer);
    else if (direction->parsed()) cmd_direction(direction_args, g, buffer);
    else if (antipode->parsed()) {
      if (!antipode_args.table && (!*dim_opt || !*q_opt)) {
        throw DomainError("antipode needs --dim and --q, or --table");
      }
      cmd_antipode(antipode_args, g, buffer);
    } else if (lemma->parsed()) cmd_lemma(lemma_args, g, buffer);
    else if (sample->parsed()) cmd_sample(sample_args, g, buffer);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }

  if (g.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << g.out_path << '\n';
      return kExitDomain;
    }
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace blochgeom::cli

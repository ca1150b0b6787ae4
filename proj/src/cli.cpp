#include "reflex/cli.hpp"

#include "reflex/classify.hpp"
#include "reflex/io.hpp"
#include "reflex/numthy.hpp"
#include "reflex/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace reflex::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<long long> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be a non-negative integer, got '" + raw + "'");
  }
}

void print_verdict(std::ostream& out, OutputFormat format, const verify::TheoremVerdict& v, bool& header_done) {
  if (format == OutputFormat::csv) {
    if (!header_done) out << "theorem,d,bound,observed,holds,unique\r\n";
    header_done = true;
    out << v.theorem << ',' << v.d << ',' << to_decimal(v.claimed_bound) << ',' << to_decimal(v.observed) << ','
        << (v.holds ? "true" : "false") << ',' << (v.unique ? "true" : "false") << "\r\n";
  } else {
    out << verify::verdict_to_json(v).dump() << '\n';
  }
}

void print_sweep(std::ostream& out, OutputFormat format, const numthy::SweepVerdict& v, bool& header_done) {
  if (format == OutputFormat::csv) {
    if (!header_done) out << "statement,length,checked,holds,extremals\r\n";
    header_done = true;
    std::string extremals;
    for (const auto& p : v.extremals) extremals += (extremals.empty() ? "" : ";") + p.to_string();
    out << v.statement << ',' << v.length << ',' << v.checked << ',' << (v.holds ? "true" : "false") << ','
        << io::csv_field(extremals) << "\r\n";
  } else {
    out << io::sweep_to_json(v).dump() << '\n';
  }
}

numthy::EnumerationOptions enumeration_options(const RunConfig& config) {
  numthy::EnumerationOptions o;
  o.max_length = config.max_partition_length;
  return o;
}

void check_length(const RunConfig& config, std::size_t n) {
  if (n < 1) throw UsageError("partition length must be >= 1");
  if (n > config.max_partition_length)
    throw UsageError("partition length " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(config.max_partition_length) + " (raise with --max-partition-len)");
}

std::vector<classify::ClassRecord> records_for(const RunConfig& config, std::size_t d, const std::string& db,
                                               std::ostream& err) {
  if (!db.empty()) {
    auto records = classify::load_classification(db);
    for (const auto& r : records)
      if (r.d != d) throw UsageError(db + " holds a record of dimension " + std::to_string(r.d));
    return records;
  }
  if (d < 2 || d > config.max_classify_dimension)
    throw UsageError("dimension " + std::to_string(d) + " outside [2, " + std::to_string(config.max_classify_dimension) +
                     "] (raise with --max-dim, or pass --db)");
  if (d == 5) err << "warning: classifying d = 5 takes a long time\n";
  return classify::classify_dimension(d, {config.max_classify_dimension, config.workers});
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    if (auto v = env_number("REFLEX_MAX_PARTITION_LEN")) config.max_partition_length = static_cast<std::size_t>(*v);
    if (auto v = env_number("REFLEX_WORKERS")) config.workers = static_cast<unsigned>(*v);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Exact construction, classification and bound verification for reflexive lattice simplices", "reflex"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--workers", config.workers, "Worker threads for classification (0 = auto; env REFLEX_WORKERS)");
  app.add_option("--max-partition-len", config.max_partition_length,
                 "Largest unit-partition length accepted (env REFLEX_MAX_PARTITION_LEN)");
  app.add_option("--max-dim", config.max_classify_dimension, "Largest classification dimension accepted")
      ->check(CLI::Range(2, static_cast<int>(classify::kHardMaxDimension)));

  std::size_t index = 0;
  auto* sylvester_cmd = app.add_subcommand("sylvester", "Print y_N and t_N of the Sylvester sequence");
  sylvester_cmd->add_option("N", index, "Index")->required();

  std::size_t length = 0;
  std::string cap;
  auto* partitions_cmd = app.add_subcommand("partitions", "Enumerate unit partitions of length N, one per line");
  partitions_cmd->add_option("N", length, "Partition length")->required();
  partitions_cmd->add_option("--max-denominator", cap, "Cap on every denominator (default: t_{N-1}, verified)");

  std::string list_arg;
  auto* weights_cmd = app.add_subcommand("weights-of", "Reflexive weight system of a unit partition");
  weights_cmd->add_option("PARTITION", list_arg, "Comma-separated denominators, e.g. 2,3,6")->required();

  auto* build_cmd = app.add_subcommand("build-sq", "Reflexive simplex S_Q of a reflexive weight system");
  build_cmd->add_option("WEIGHTS", list_arg, "Comma-separated weights, e.g. 6,4,1,1")->required();

  std::string file_arg;
  auto* info_cmd = app.add_subcommand("simplex-info", "Weights, volume, duality and point counts of a simplex JSON file");
  info_cmd->add_option("FILE", file_arg, "Simplex JSON {\"dim\", \"vertices\"}")->required();

  std::size_t dimension = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Classify all reflexive simplices of dimension D");
  classify_cmd->add_option("D", dimension, "Dimension")->required();
  classify_cmd->add_option("--out", config.output_path, "Write records here instead of standard output");

  std::string which;
  std::string db;
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem in dimension D; exit 2 if a verdict fails");
  verify_cmd->add_option("WHICH", which, "Statement to check")->required()->check(CLI::IsMember({"A", "B", "C", "kprop", "all"}));
  verify_cmd->add_option("D", dimension, "Dimension")->required();
  verify_cmd->add_option("--db", db, "Classification JSONL from `classify`; classified on the fly when absent");

  bool reports = false;
  auto* sweep_cmd = app.add_subcommand("sweep-kprop", "Check the unit-partition product bounds for every partition of length N");
  sweep_cmd->add_option("N", length, "Partition length")->required();
  sweep_cmd->add_flag("--reports", reports, "Also print one report per partition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.format = format_name == "csv" ? OutputFormat::csv : OutputFormat::json;

  try {
    bool header_done = false;
    if (sylvester_cmd->parsed()) {
      config.command = "sylvester";
      nlohmann::ordered_json j;
      j["n"] = index;
      j["y"] = to_decimal(numthy::sylvester(index));
      j["t"] = to_decimal(numthy::sylvester_t(index));
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (partitions_cmd->parsed()) {
      config.command = "partitions";
      check_length(config, length);
      auto options = enumeration_options(config);
      if (!cap.empty()) options.max_denominator = parse_integer(cap);
      numthy::enumerate_unit_partitions(length, options, [&](const numthy::UnitPartition& p) {
        if (config.format == OutputFormat::csv) {
          const auto& ks = p.denominators();
          for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? "," : "") << ks[i];
          out << "\r\n";
        } else {
          out << io::partition_to_json(p).dump() << '\n';
        }
      });
      return kExitOk;
    }

    if (weights_cmd->parsed()) {
      config.command = "weights-of";
      const auto p = numthy::UnitPartition::from_denominators(parse_integer_list(list_arg));
      out << io::weights_to_json(weights::partition_to_weights(p)).dump() << '\n';
      return kExitOk;
    }

    if (build_cmd->parsed()) {
      config.command = "build-sq";
      const auto q = weights::WeightSystem::from_weights(parse_integer_list(list_arg));
      out << io::simplex_to_json(simplex::build_SQ(q)).dump() << '\n';
      return kExitOk;
    }

    if (info_cmd->parsed()) {
      config.command = "simplex-info";
      const auto s = io::read_simplex_file(file_arg);
      nlohmann::ordered_json j = io::simplex_to_json(s);
      const auto q = simplex::weight_system_of(s);
      j["weights"] = io::weights_to_json(q)["weights"];
      j["reducedWeights"] = io::weights_to_json(weights::reduce(q))["weights"];
      j["factor"] = std::to_string(simplex::factor_of(s));
      j["volume"] = std::to_string(simplex::volume(s));
      const auto dual = simplex::dual(s);
      nlohmann::ordered_json dual_rows = nlohmann::ordered_json::array();
      for (const auto& v : dual.vertices) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& f : v) row.push_back(f.to_string());
        dual_rows.push_back(std::move(row));
      }
      j["dual"] = std::move(dual_rows);
      j["reflexive"] = dual.is_integral();
      j["points"] = std::to_string(simplex::lattice_points(s).count);
      nlohmann::ordered_json edges = nlohmann::ordered_json::array();
      const auto report = simplex::edge_lattice_counts(s);
      for (const auto& e : report.edges) edges.push_back({{"i", e.i}, {"j", e.j}, {"points", std::to_string(e.points)}});
      j["edges"] = std::move(edges);
      j["maxEdge"] = std::to_string(report.max_points());
      if (s.dim() <= simplex::kMaxCanonicalDimension) j["canonical"] = io::matrix_to_json(simplex::canonical_form(s));
      out << j.dump() << '\n';
      return kExitOk;
    }

    if (classify_cmd->parsed()) {
      config.command = "classify";
      const auto records = records_for(config, dimension, "", err);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!config.output_path.empty()) {
        file.open(config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + config.output_path + " for writing");
        sink = &file;
      }
      if (config.format == OutputFormat::csv) {
        io::export_csv(records, *sink);
      } else {
        for (const auto& r : records) *sink << classify::record_to_json(r).dump() << '\n';
      }
      if (!*sink) throw std::runtime_error("write failed");
      err << "classified " << records.size() << " classes in dimension " << dimension << '\n';
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      config.command = "verify";
      bool all_passed = true;
      auto emit = [&](const verify::TheoremVerdict& v) {
        all_passed = all_passed && v.passed();
        print_verdict(out, config.format, v, header_done);
      };
      auto sweeps = [&] {
        check_length(config, dimension + 1);
        const auto options = enumeration_options(config);
        bool sweep_header = false;
        for (const auto& v : numthy::kprop_sweep(dimension + 1, options)) {
          all_passed = all_passed && v.holds;
          print_sweep(out, config.format, v, sweep_header);
        }
        for (const auto& v : numthy::curtiss_corollary_sweep(dimension + 1, options)) {
          all_passed = all_passed && v.holds;
          print_sweep(out, config.format, v, sweep_header);
        }
      };
      if (which == "kprop") {
        sweeps();
      } else {
        if (dimension < 2) throw UsageError("dimension must be >= 2");
        const auto records = records_for(config, dimension, db, err);
        if (which == "A" || which == "all") {
          emit(verify::verify_theorem_A(dimension, records));
          if (dimension <= 3) emit(verify::verify_theorem_A_points(dimension, records));
          if (dimension >= 3) emit(verify::verify_corollary_bracket(dimension, records));
        }
        if (which == "B" || which == "all") emit(verify::verify_theorem_B(dimension, records));
        if (which == "C" || which == "all") {
          emit(verify::verify_theorem_C(dimension, records));
          emit(verify::verify_theorem_C_dual_volume(dimension, records));
        }
        if (which == "all") {
          check_length(config, dimension + 1);
          emit(verify::verify_weight_bound(dimension, enumeration_options(config)));
          sweeps();
        }
      }
      return all_passed ? kExitOk : kExitVerdictFailed;
    }

    if (sweep_cmd->parsed()) {
      config.command = "sweep-kprop";
      check_length(config, length);
      const auto options = enumeration_options(config);
      bool all_passed = true;
      if (reports) {
        numthy::enumerate_unit_partitions(length, options, [&](const numthy::UnitPartition& p) {
          out << io::kprop_to_json(numthy::check_kprop(p)).dump() << '\n';
        });
      }
      for (const auto& v : numthy::kprop_sweep(length, options)) {
        all_passed = all_passed && v.holds;
        print_sweep(out, config.format, v, header_done);
      }
      if (length >= 2) {
        for (const auto& v : numthy::curtiss_corollary_sweep(length, options)) {
          all_passed = all_passed && v.holds;
          print_sweep(out, config.format, v, header_done);
        }
      }
      return all_passed ? kExitOk : kExitVerdictFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace reflex::cli

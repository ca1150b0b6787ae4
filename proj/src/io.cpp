#include "reflex/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace reflex::io {

namespace {

template <typename Range>
ordered_json decimal_array(const Range& values) {
  ordered_json a = ordered_json::array();
  for (const auto& v : values) a.push_back(to_decimal(Integer(v)));
  return a;
}

Integer json_integer(const nlohmann::json& v) {
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  throw std::invalid_argument("expected an integer or decimal string");
}

template <typename Range>
std::string joined(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : "|") << v;
    first = false;
  }
  return os.str();
}

}  // namespace

ordered_json partition_to_json(const numthy::UnitPartition& p) { return decimal_array(p.denominators()); }

ordered_json weights_to_json(const weights::WeightSystem& q) {
  ordered_json j;
  j["weights"] = decimal_array(q.weights());
  j["total"] = to_decimal(q.total());
  j["m"] = to_decimal(weights::m_of(q).value);
  return j;
}

ordered_json matrix_to_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(decimal_array(m.row(i)));
  return rows;
}

ordered_json simplex_to_json(const simplex::LatticeSimplex& s) {
  ordered_json j;
  j["dim"] = s.dim();
  j["vertices"] = matrix_to_json(s.vertices());
  return j;
}

simplex::LatticeSimplex simplex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw std::invalid_argument("simplex JSON needs 'dim' and 'vertices'");
  const std::size_t d = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("vertices");
  if (!rows.is_array() || rows.size() != d + 1) throw std::invalid_argument("simplex JSON needs d+1 vertices");
  IntMatrix m(d + 1, d);
  for (std::size_t i = 0; i <= d; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != d) throw std::invalid_argument("vertex " + std::to_string(i) + " needs d coordinates");
    for (std::size_t k = 0; k < d; ++k) m(i, k) = to_int64(json_integer(row.at(k)));
  }
  return simplex::LatticeSimplex::from_vertices(std::move(m));
}

simplex::LatticeSimplex read_simplex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": malformed JSON: " + e.what());
  }
  return simplex_from_json(j);
}

ordered_json sweep_to_json(const numthy::SweepVerdict& v) {
  ordered_json j;
  j["statement"] = v.statement;
  j["holds"] = v.holds;
  ordered_json extremals = ordered_json::array();
  for (const auto& p : v.extremals) extremals.push_back(partition_to_json(p));
  j["extremals"] = std::move(extremals);
  j["length"] = v.length;
  j["checked"] = v.checked;
  if (v.counterexample) j["counterexample"] = partition_to_json(*v.counterexample);
  return j;
}

ordered_json kprop_to_json(const numthy::KpropReport& r) {
  ordered_json j;
  j["partition"] = partition_to_json(r.partition);
  j["lcm"] = to_decimal(r.lcm);
  j["product"] = to_decimal(r.product);
  j["headProduct"] = to_decimal(r.head_product);
  j["lcmSquareBound"] = r.lcm_square_bound && r.lcm_square_divides;
  j["productUpperBound"] = r.product_upper_bound;
  j["amgmLowerBound"] = r.amgm_lower_bound;
  if (r.head_applicable) j["headProductBound"] = r.quotient_head_bound && r.head_upper_bound;
  ordered_json eq = ordered_json::array();
  if (r.is_sylvester) eq.push_back("sylvester");
  if (r.is_all_equal) eq.push_back("all-equal");
  if (r.is_enlarged_sylvester) eq.push_back("enlarged-sylvester");
  if (r.is_two_six_six_six) eq.push_back("2-6-6-6");
  j["equality"] = std::move(eq);
  j["holds"] = r.holds();
  return j;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void export_csv(const std::vector<classify::ClassRecord>& records, std::ostream& out) {
  out << kCsvHeader << "\r\n";
  for (const auto& r : records) {
    const std::string fields[] = {
        std::to_string(r.d),
        joined(r.reduced_weights.weights()),
        joined(r.partition.denominators()),
        to_decimal(r.m),
        std::to_string(r.lambda),
        std::to_string(r.volume),
        std::to_string(r.lattice_points),
        std::to_string(r.max_edge_points),
        r.self_dual ? "true" : "false",
    };
    for (std::size_t i = 0; i < std::size(fields); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << "\r\n";
  }
}

void export_csv(const std::vector<classify::ClassRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  export_csv(records, out);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace reflex::io

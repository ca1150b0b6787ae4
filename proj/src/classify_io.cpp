#include "reflex/classify.hpp"

#include <fstream>

namespace reflex::classify {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <typename Range>
ordered_json decimal_array(const Range& values) {
  ordered_json a = ordered_json::array();
  for (const auto& v : values) a.push_back(to_decimal(Integer(v)));
  return a;
}

Integer integer_field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  throw std::invalid_argument(std::string("field '") + key + "' must be a decimal string");
}

std::vector<Integer> integer_list(const json& v, const char* key) {
  if (!v.is_array()) throw std::invalid_argument(std::string("field '") + key + "' must be an array");
  std::vector<Integer> out;
  for (const auto& x : v) {
    if (x.is_string())
      out.push_back(parse_integer(x.get<std::string>()));
    else if (x.is_number_integer())
      out.emplace_back(x.get<std::int64_t>());
    else
      throw std::invalid_argument(std::string("field '") + key + "' must hold decimal strings");
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

ordered_json record_to_json(const ClassRecord& r) {
  ordered_json j;
  j["d"] = r.d;
  j["weights"] = decimal_array(r.reduced_weights.weights());
  j["partition"] = decimal_array(r.partition.denominators());
  j["m"] = to_decimal(r.m);
  j["lambda"] = std::to_string(r.lambda);
  ordered_json vertices = ordered_json::array();
  for (std::size_t i = 0; i < r.canonical_vertices.rows(); ++i) vertices.push_back(decimal_array(r.canonical_vertices.row(i)));
  j["vertices"] = std::move(vertices);
  j["volume"] = std::to_string(r.volume);
  j["points"] = std::to_string(r.lattice_points);
  j["maxEdge"] = std::to_string(r.max_edge_points);
  j["selfDual"] = r.self_dual;
  return j;
}

ClassRecord record_from_json(const json& j) {
  require(j.is_object(), "record must be a JSON object");
  require(j.contains("d") && j.at("d").is_number_unsigned(), "field 'd' must be a non-negative integer");
  const std::size_t d = j.at("d").get<std::size_t>();
  require(d >= 1, "dimension must be positive");

  require(j.contains("weights"), "missing field 'weights'");
  auto qs = integer_list(j.at("weights"), "weights");
  require(qs.size() == d + 1, "expected d+1 weights");
  require(std::is_sorted(qs.begin(), qs.end(), std::greater<>()), "weights must be sorted descending");
  const auto q = weights::WeightSystem::from_weights(qs);
  require(weights::is_reflexive(q), "weights " + q.to_string() + " are not a reflexive weight system");

  require(j.contains("partition"), "missing field 'partition'");
  const auto partition = numthy::UnitPartition::from_denominators(integer_list(j.at("partition"), "partition"));
  require(partition == weights::weights_to_partition(q), "partition does not match weights");

  const Integer m = integer_field(j, "m");
  require(m == weights::m_of(q).as_integer(), "m does not match weights");
  const Integer lambda = integer_field(j, "lambda");
  require(lambda >= 1 && m % lambda == 0, "lambda must be a positive divisor of m");

  require(j.contains("vertices") && j.at("vertices").is_array(), "field 'vertices' must be an array");
  const auto& rows = j.at("vertices");
  require(rows.size() == d + 1, "expected d+1 vertices");
  IntMatrix v(d + 1, d);
  for (std::size_t i = 0; i <= d; ++i) {
    const auto coords = integer_list(rows.at(i), "vertices");
    require(coords.size() == d, "vertex has wrong length");
    for (std::size_t k = 0; k < d; ++k) v(i, k) = to_int64(coords[k]);
  }
  const auto s = simplex::LatticeSimplex::from_vertices(v);
  require(simplex::canonical_form(s) == v, "vertices are not in canonical form");
  require(simplex::is_reflexive(s), "simplex is not reflexive");
  require(weights::reduce(simplex::weight_system_of(s)) == q, "vertices do not have the stated weights");
  require(simplex::factor_of(s) == lambda, "lambda does not match the vertices");

  const Integer volume = integer_field(j, "volume");
  require(volume == lambda * q.total(), "volume != lambda * |Q|");
  require(volume == simplex::volume(s), "volume does not match the vertices");

  const Integer points = integer_field(j, "points");
  require(points >= Integer(d + 2), "too few lattice points");
  const Integer max_edge = integer_field(j, "maxEdge");
  require(max_edge == simplex::edge_lattice_counts(s).max_points(), "maxEdge does not match the vertices");

  require(j.contains("selfDual") && j.at("selfDual").is_boolean(), "field 'selfDual' must be a boolean");
  const bool self_dual = j.at("selfDual").get<bool>();
  require(self_dual == (simplex::canonical_form(simplex::dual(s).to_lattice()) == v), "selfDual flag is wrong");

  return ClassRecord{d, q, partition, m, to_int64(lambda), v, to_int64(volume), to_int64(points),
                     to_int64(max_edge), self_dual};
}

void save_classification(const std::vector<ClassRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<ClassRecord> load_classification(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ClassRecord> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw LoadError(number, std::string("malformed JSON: ") + e.what());
    } catch (const std::exception& e) {
      throw LoadError(number, e.what());
    }
  }
  return records;
}

}  // namespace reflex::classify

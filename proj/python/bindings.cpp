#include "reflex/classify.hpp"
#include "reflex/io.hpp"
#include "reflex/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace reflex;

namespace {

// Python ints are arbitrary precision; cross the boundary as decimal text.
py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

Integer from_py(const py::handle& v) {
  if (!py::isinstance<py::int_>(v)) throw py::type_error("expected int");
  return parse_integer(py::str(v).cast<std::string>());
}

std::vector<Integer> from_py_list(const py::iterable& xs) {
  std::vector<Integer> out;
  for (auto x : xs) out.push_back(from_py(x));
  return out;
}

py::tuple to_py_tuple(const std::vector<Integer>& xs) {
  py::tuple t(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) t[i] = to_py(xs[i]);
  return t;
}

py::list to_py_matrix(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (auto x : m.row(i)) row.append(x);
    rows.append(row);
  }
  return rows;
}

simplex::LatticeSimplex simplex_from_py(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw std::invalid_argument("simplex needs d+1 vertices");
  const std::size_t d = rows.size() - 1;
  IntMatrix m(d + 1, d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (rows[i].size() != d) throw std::invalid_argument("vertex " + std::to_string(i) + " needs d coordinates");
    for (std::size_t k = 0; k < d; ++k) m(i, k) = rows[i][k];
  }
  return simplex::LatticeSimplex::from_vertices(std::move(m));
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_py(boost::multiprecision::numerator(r)), to_py(boost::multiprecision::denominator(r)));
}

py::dict record_to_py(const classify::ClassRecord& r) {
  py::dict d;
  d["d"] = r.d;
  d["weights"] = to_py_tuple(r.reduced_weights.weights());
  d["partition"] = to_py_tuple(r.partition.denominators());
  d["m"] = to_py(r.m);
  d["lambda"] = r.lambda;
  d["vertices"] = to_py_matrix(r.canonical_vertices);
  d["volume"] = r.volume;
  d["points"] = r.lattice_points;
  d["max_edge"] = r.max_edge_points;
  d["self_dual"] = r.self_dual;
  return d;
}

py::dict verdict_to_py(const verify::TheoremVerdict& v) {
  py::dict d;
  d["theorem"] = v.theorem;
  d["d"] = v.d;
  d["bound"] = to_py(v.claimed_bound);
  d["observed"] = to_py(v.observed);
  d["holds"] = v.holds;
  d["unique"] = v.unique;
  py::list extremals;
  for (const auto& m : v.extremal_classes) extremals.append(to_py_matrix(m));
  for (const auto& q : v.extremal_weights) extremals.append(to_py_tuple(q.weights()));
  d["extremals"] = extremals;
  d["failures"] = v.failures;
  return d;
}

py::dict sweep_to_py(const numthy::SweepVerdict& v) {
  py::dict d;
  d["statement"] = v.statement;
  d["length"] = v.length;
  d["checked"] = v.checked;
  d["holds"] = v.holds;
  py::list extremals;
  for (const auto& p : v.extremals) extremals.append(to_py_tuple(p.denominators()));
  d["extremals"] = extremals;
  d["counterexample"] = v.counterexample ? py::object(to_py_tuple(v.counterexample->denominators())) : py::none();
  return d;
}

numthy::EnumerationOptions enumeration(std::optional<py::int_> max_denominator, std::size_t max_length) {
  numthy::EnumerationOptions o;
  if (max_denominator) o.max_denominator = from_py(*max_denominator);
  o.max_length = max_length;
  return o;
}

}  // namespace

PYBIND11_MODULE(reflex, m) {
  m.doc() = "Reflexive lattice simplices: unit partitions, weight systems, classification and bound checks.";

  m.def("sylvester", [](std::size_t n) { return to_py(numthy::sylvester(n)); }, py::arg("n"), "y_n of the Sylvester sequence.");
  m.def("sylvester_t", [](std::size_t n) { return to_py(numthy::sylvester_t(n)); }, py::arg("n"), "t_n = y_n - 1.");

  m.def(
      "unit_partitions",
      [](std::size_t n, std::optional<py::int_> max_denominator, std::size_t max_length) {
        py::list out;
        numthy::enumerate_unit_partitions(n, enumeration(max_denominator, max_length),
                                          [&](const numthy::UnitPartition& p) { out.append(to_py_tuple(p.denominators())); });
        return out;
      },
      py::arg("n"), py::arg("max_denominator") = py::none(), py::arg("max_length") = 7,
      "Sorted tuples (k_0 <= ... <= k_{n-1}) with reciprocals summing to 1, in lexicographic order.");

  m.def(
      "weights_of",
      [](const py::iterable& partition) {
        const auto p = numthy::UnitPartition::from_denominators(from_py_list(partition));
        return to_py_tuple(weights::partition_to_weights(p).weights());
      },
      py::arg("partition"), "Reflexive weight system lcm/k_i, sorted descending.");
  m.def(
      "partition_of",
      [](const py::iterable& qs) {
        return to_py_tuple(weights::weights_to_partition(weights::WeightSystem::from_weights(from_py_list(qs))).denominators());
      },
      py::arg("weights"));
  m.def(
      "is_reflexive_weights",
      [](const py::iterable& qs) { return weights::is_reflexive(weights::WeightSystem::from_weights(from_py_list(qs))); },
      py::arg("weights"));
  m.def(
      "m_of", [](const py::iterable& qs) { return fraction(weights::m_of(weights::WeightSystem::from_weights(from_py_list(qs))).value); },
      py::arg("weights"), "|Q|^(d-1) / (q_0 ... q_d) as a Fraction.");

  m.def(
      "build_pq",
      [](const py::iterable& qs) {
        return to_py_matrix(simplex::build_PQ(weights::WeightSystem::from_weights(from_py_list(qs))).vertices());
      },
      py::arg("weights"));
  m.def(
      "build_sq",
      [](const py::iterable& qs) {
        return to_py_matrix(simplex::build_SQ(weights::WeightSystem::from_weights(from_py_list(qs))).vertices());
      },
      py::arg("weights"));
  m.def(
      "dual",
      [](const std::vector<std::vector<std::int64_t>>& vertices) {
        py::list rows;
        for (const auto& v : simplex::dual(simplex_from_py(vertices)).vertices) {
          py::list row;
          for (const auto& f : v) row.append(fraction(Rational(f.num, f.den)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("vertices"), "Vertices of the dual simplex as Fractions.");
  m.def(
      "canonical_form", [](const std::vector<std::vector<std::int64_t>>& vertices) {
        return to_py_matrix(simplex::canonical_form(simplex_from_py(vertices)));
      },
      py::arg("vertices"));
  m.def(
      "simplex_info",
      [](const std::vector<std::vector<std::int64_t>>& vertices) {
        const auto s = simplex_from_py(vertices);
        py::dict d;
        d["dim"] = s.dim();
        d["weights"] = to_py_tuple(simplex::weight_system_of(s).weights());
        d["factor"] = simplex::factor_of(s);
        d["volume"] = simplex::volume(s);
        d["reflexive"] = simplex::is_reflexive(s);
        d["points"] = simplex::lattice_points(s).count;
        d["max_edge"] = simplex::edge_lattice_counts(s).max_points();
        return d;
      },
      py::arg("vertices"));

  m.def(
      "classify",
      [](std::size_t d, unsigned workers, std::size_t max_dimension) {
        std::vector<classify::ClassRecord> records;
        {
          py::gil_scoped_release release;
          records = classify::classify_dimension(d, {max_dimension, workers});
        }
        py::list out;
        for (const auto& r : records) out.append(record_to_py(r));
        return out;
      },
      py::arg("d"), py::arg("workers") = 1, py::arg("max_dimension") = 4,
      "All isomorphism classes of d-dimensional reflexive simplices, volume descending.");

  m.def(
      "verify",
      [](const std::string& which, std::size_t d, unsigned workers) {
        py::list out;
        auto records = [&] {
          py::gil_scoped_release release;
          return classify::classify_dimension(d, {classify::kHardMaxDimension, workers});
        };
        if (which == "A") {
          const auto rs = records();
          out.append(verdict_to_py(verify::verify_theorem_A(d, rs)));
          if (d <= 3) out.append(verdict_to_py(verify::verify_theorem_A_points(d, rs)));
          if (d >= 3) out.append(verdict_to_py(verify::verify_corollary_bracket(d, rs)));
        } else if (which == "B") {
          out.append(verdict_to_py(verify::verify_theorem_B(d, records())));
        } else if (which == "C") {
          const auto rs = records();
          out.append(verdict_to_py(verify::verify_theorem_C(d, rs)));
          out.append(verdict_to_py(verify::verify_theorem_C_dual_volume(d, rs)));
        } else if (which == "weight-bound") {
          out.append(verdict_to_py(verify::verify_weight_bound(d)));
        } else {
          throw std::invalid_argument("unknown statement '" + which + "' (A, B, C or weight-bound)");
        }
        return out;
      },
      py::arg("which"), py::arg("d"), py::arg("workers") = 1, "Theorem verdicts from a fresh classification.");

  m.def(
      "kprop_sweep",
      [](std::size_t n) {
        py::list out;
        for (const auto& v : numthy::kprop_sweep(n)) out.append(sweep_to_py(v));
        if (n >= 2)
          for (const auto& v : numthy::curtiss_corollary_sweep(n)) out.append(sweep_to_py(v));
        return out;
      },
      py::arg("n"));
  m.def(
      "cruc_inequality_check",
      [](std::size_t n_max) {
        const auto v = numthy::cruc_inequality_check(n_max);
        py::list equal;
        for (const auto& c : v.cases)
          if (c.equal) equal.append(py::make_tuple(c.n, c.r));
        py::dict d;
        d["holds"] = v.holds;
        d["equality_cases"] = equal;
        return d;
      },
      py::arg("n_max"));
  m.def(
      "vardi_floor_check",
      [](std::size_t n_max, const std::string& digits) { return numthy::to_string(numthy::vardi_floor_check(n_max, digits).overall); },
      py::arg("n_max"), py::arg("digits") = std::string(numthy::kVardiConstantDigits));
}

#include "reflex/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reflex::simplex {

Fraction Fraction::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = checked::sub(0, num);
    den = checked::sub(0, den);
  }
  const std::int64_t g = gcd64(num, den);
  return {num / g, den / g};
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

LatticeSimplex LatticeSimplex::from_vertices(IntMatrix vertices) {
  const std::size_t d = vertices.cols();
  if (d == 0 || vertices.rows() != d + 1)
    throw std::invalid_argument("a d-simplex needs d+1 vertices in Z^d, got " + std::to_string(vertices.rows()) +
                                "x" + std::to_string(d));
  std::vector<std::int64_t> weights(d + 1);
  int sign = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    std::int64_t c = determinant(vertices.without_row(i));
    if (i % 2 == 1) c = -c;
    if (c == 0) throw std::invalid_argument("simplex is degenerate or has the origin on its boundary");
    const int s = c > 0 ? 1 : -1;
    if (sign != 0 && s != sign) throw std::invalid_argument("origin is not in the interior of the simplex");
    sign = s;
    weights[i] = c > 0 ? c : -c;
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i <= d; ++i) sum = checked::add(sum, checked::mul(weights[i], vertices(i, k)));
    if (sum != 0) throw std::logic_error("weights do not annihilate the vertices");
  }
  return LatticeSimplex(std::move(vertices), std::move(weights));
}

Point LatticeSimplex::vertex(std::size_t i) const {
  const auto r = vertices_.row(i);
  return Point(r.begin(), r.end());
}

bool RationalSimplex::is_integral() const {
  for (const auto& v : vertices)
    for (const auto& x : v)
      if (!x.is_integer()) return false;
  return true;
}

LatticeSimplex RationalSimplex::to_lattice() const {
  if (!is_integral()) throw std::domain_error("dual simplex is not a lattice simplex");
  IntMatrix m(vertices.size(), dim);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = vertices[i][k].num;
  return LatticeSimplex::from_vertices(std::move(m));
}

weights::WeightSystem weight_system_of(const LatticeSimplex& s) {
  std::vector<Integer> qs;
  for (auto q : s.vertex_weights()) qs.emplace_back(q);
  return weights::WeightSystem::from_weights(std::move(qs));
}

LatticeSimplex build_PQ(const weights::WeightSystem& q) {
  if (!q.is_reduced()) throw std::invalid_argument("P_Q needs a reduced weight system, got " + q.to_string());
  const std::size_t n = q.length();
  std::vector<std::int64_t> w;
  for (const auto& x : q.weights()) w.push_back(to_int64(x));

  // Row operations on (A | w) until w = e_0; then A q = e_0 with A unimodular,
  // and the images of the unit vectors in Z^{d+1} / Z q are the columns of
  // A with the first row dropped.
  IntMatrix a = IntMatrix::identity(n);
  auto row_axpy = [&](std::size_t target, std::size_t source, std::int64_t f) {
    w[target] = checked::sub(w[target], checked::mul(f, w[source]));
    for (std::size_t c = 0; c < n; ++c) a(target, c) = checked::sub(a(target, c), checked::mul(f, a(source, c)));
  };
  while (true) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != 0 && (pivot == n || std::abs(w[i]) < std::abs(w[pivot]))) pivot = i;
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot || w[i] == 0) continue;
      row_axpy(i, pivot, w[i] / w[pivot]);
      if (w[i] != 0) done = false;
    }
    if (done) {
      if (pivot != 0) {
        std::swap(w[0], w[pivot]);
        for (std::size_t c = 0; c < n; ++c) std::swap(a(0, c), a(pivot, c));
      }
      break;
    }
  }
  if (w[0] == -1)
    for (std::size_t c = 0; c < n; ++c) a(0, c) = -a(0, c);
  else if (w[0] != 1)
    throw std::logic_error("weight row is not primitive");

  IntMatrix v(n, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k + 1 < n; ++k) v(i, k) = a(k + 1, i);
  auto s = LatticeSimplex::from_vertices(std::move(v));
  if (weight_system_of(s) != q) throw std::logic_error("P_Q construction lost the weight system");
  return s;
}

LatticeSimplex build_PQ_explicit(const weights::WeightSystem& q) {
  const std::size_t d = q.dimension();
  if (q.weights().back() != 1) throw std::invalid_argument("explicit P_Q needs a weight equal to 1");
  IntMatrix v(d + 1, d);
  for (std::size_t i = 0; i < d; ++i) {
    v(i, i) = 1;
    v(d, i) = -to_int64(q[i]);
  }
  return LatticeSimplex::from_vertices(std::move(v));
}

RationalSimplex dual(const LatticeSimplex& s) {
  const std::size_t d = s.dim();
  RationalSimplex out{d, {}};
  for (std::size_t i = 0; i <= d; ++i) {
    const IntMatrix a = s.vertices().without_row(i);
    const std::int64_t det = determinant(a);
    std::vector<Fraction> eta;
    for (std::size_t k = 0; k < d; ++k) {
      IntMatrix replaced = a;
      for (std::size_t r = 0; r < d; ++r) replaced(r, k) = -1;
      eta.push_back(Fraction::make(determinant(replaced), det));
    }
    out.vertices.push_back(std::move(eta));
  }
  return out;
}

bool is_reflexive(const LatticeSimplex& s) { return dual(s).is_integral(); }

LatticeSimplex build_SQ(const weights::WeightSystem& q) {
  if (!weights::is_reflexive(q)) throw std::invalid_argument("S_Q needs a reflexive weight system, got " + q.to_string());
  return dual(build_PQ(q)).to_lattice();
}

LatticeSimplex build_SQ_explicit(const weights::WeightSystem& q) {
  if (!weights::is_reflexive(q)) throw std::invalid_argument("S_Q needs a reflexive weight system, got " + q.to_string());
  if (q.weights().back() != 1) throw std::invalid_argument("explicit S_Q needs a weight equal to 1");
  const std::size_t d = q.dimension();
  IntMatrix v(d + 1, d);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t k = 0; k < d; ++k) v(i, k) = -1;
  for (std::size_t i = 0; i < d; ++i) v(i, i) = checked::sub(to_int64(q.total() / q[i]), 1);
  return LatticeSimplex::from_vertices(std::move(v));
}

std::int64_t volume(const LatticeSimplex& s) {
  std::int64_t by_weights = 0;
  for (auto q : s.vertex_weights()) by_weights = checked::add(by_weights, q);
  const std::size_t d = s.dim();
  IntMatrix edges(d, d);
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t k = 0; k < d; ++k) edges(j - 1, k) = checked::sub(s.vertices()(j, k), s.vertices()(0, k));
  std::int64_t by_edges = determinant(edges);
  if (by_edges < 0) by_edges = -by_edges;
  if (by_edges != by_weights) throw std::logic_error("volume routes disagree for " + s.to_string());
  return by_weights;
}

LatticePointCount lattice_points(const LatticeSimplex& s, bool collect_points) {
  // x = v_0 + E mu with E the edge matrix. Z^d / E Z^d has |det E| cosets,
  // one per residue y of the Hermite form of E. For mu reduced into [0,1)^d,
  // x lies in the simplex iff sum mu <= 1; the only other points are v_1..v_d.
  const std::size_t d = s.dim();
  const auto& v = s.vertices();
  IntMatrix e(d, d);
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t k = 0; k < d; ++k) e(k, j - 1) = checked::sub(v(j, k), v(0, k));
  const std::int64_t det = determinant(e);
  const std::int64_t n = det < 0 ? -det : det;
  if (n > kMaxCosets) throw std::length_error("simplex volume exceeds the lattice-point coset limit");

  // Adjugate scaled by sign(det), so mu = adj * y / n.
  IntMatrix adj(d, d);
  if (d == 1) {
    adj(0, 0) = 1;
  } else {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t r = 0, rr = 0; r < d; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, cc = 0; c < d; ++c) {
            if (c == i) continue;
            minor(rr, cc++) = e(r, c);
          }
          ++rr;
        }
        const std::int64_t m = determinant(minor);
        adj(i, j) = ((i + j) % 2 == 0) == (det > 0) ? m : -m;
      }
  }

  const IntMatrix h = column_hermite_form(e);
  LatticePointCount out;
  out.count = static_cast<std::int64_t>(d);
  if (collect_points)
    for (std::size_t j = 1; j <= d; ++j) out.points.emplace_back(v.row(j).begin(), v.row(j).end());

  Point y(d, 0);
  std::vector<std::int64_t> r(d);
  while (true) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc = (acc + checked::mul(adj(i, j) % n, y[j]) % n) % n;
      r[i] = acc < 0 ? acc + n : acc;
      total += r[i];
    }
    if (total <= n) {
      ++out.count;
      if (collect_points) {
        Point x(d);
        for (std::size_t k = 0; k < d; ++k) {
          std::int64_t acc = 0;
          for (std::size_t j = 0; j < d; ++j) acc = checked::add(acc, checked::mul(e(k, j), r[j]));
          if (acc % n != 0) throw std::logic_error("coset representative is not a lattice point");
          x[k] = checked::add(v(0, k), acc / n);
        }
        out.points.push_back(std::move(x));
      }
    }
    std::size_t k = 0;
    while (k < d && y[k] + 1 == h(k, k)) y[k++] = 0;
    if (k == d) break;
    ++y[k];
  }
  if (collect_points) std::sort(out.points.begin(), out.points.end());
  return out;
}

std::int64_t EdgeReport::max_points() const {
  std::int64_t best = 0;
  for (const auto& e : edges) best = std::max(best, e.points);
  return best;
}

std::vector<std::int64_t> EdgeReport::sorted_counts() const {
  std::vector<std::int64_t> out;
  for (const auto& e : edges) out.push_back(e.points);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeReport edge_lattice_counts(const LatticeSimplex& s) {
  EdgeReport report;
  const auto& v = s.vertices();
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = i + 1; j < v.rows(); ++j) {
      std::int64_t g = 0;
      for (std::size_t k = 0; k < v.cols(); ++k) g = gcd64(g, checked::sub(v(i, k), v(j, k)));
      report.edges.push_back({i, j, g + 1});
    }
  return report;
}

IntMatrix canonical_form(const LatticeSimplex& s) {
  const std::size_t d = s.dim();
  if (d > kMaxCanonicalDimension) throw std::invalid_argument("canonical form supports d <= 6");
  std::vector<std::size_t> order(d + 1);
  std::iota(order.begin(), order.end(), 0);
  std::optional<IntMatrix> best;
  IntMatrix permuted(d + 1, d);
  do {
    for (std::size_t i = 0; i <= d; ++i)
      std::copy(s.vertices().row(order[i]).begin(), s.vertices().row(order[i]).end(), permuted.row(i).begin());
    IntMatrix h = column_hermite_form(permuted);
    if (!best || h < *best) best = std::move(h);
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

std::int64_t factor_of(const LatticeSimplex& s) {
  std::int64_t by_minors = 0;
  for (auto q : s.vertex_weights()) by_minors = gcd64(by_minors, q);
  const std::int64_t by_hermite = row_lattice_index(s.vertices());
  if (by_minors != by_hermite) throw std::logic_error("factor routes disagree for " + s.to_string());
  return by_minors;
}

LatticeSimplex transform(const IntMatrix& m, const LatticeSimplex& s) {
  return LatticeSimplex::from_vertices(s.vertices() * m.transposed());
}

}  // namespace reflex::simplex

#include "qrep/census.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include <fmt/format.h>

namespace qrep {

RepEnumerator::RepEnumerator(Quiver quiver, DimVector dims, FieldSpec field, std::uint64_t cap)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), field_(std::move(field)) {
  if (dims_.size() != quiver_.vertex_count()) throw Error(Errc::VertexMismatch, "dimension vector length");
  if (!dims_.is_nonnegative()) throw Error(Errc::NegativeCoordinate, "negative dimension");
  entries_ = qrep::entry_count(quiver_, dims_);
  size_ = saturating_pow(field_.q(), entries_);
  if (size_ > cap) {
    throw Error(Errc::TooLarge, fmt::format("{}^{} representations exceed cap {}", field_.q(), entries_, cap));
  }
}

VectorGF RepEnumerator::entries_at(std::uint64_t index) const {
  VectorGF entries(entries_);
  const std::uint64_t q = field_.q();
  for (std::size_t i = entries_; i-- > 0;) {
    entries[i] = FieldElement(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  return entries;
}

std::uint64_t RepEnumerator::index_of(const VectorGF& entries) const {
  std::uint64_t index = 0;
  for (auto x : entries) index = index * field_.q() + x.index();
  return index;
}

Representation RepEnumerator::at(std::uint64_t index) const {
  return Representation::assemble(quiver_, field_, dims_, entries_at(index));
}

std::optional<Representation> RepEnumerator::next() {
  if (cursor_ >= size_) return std::nullopt;
  return at(cursor_++);
}

RepEnumerator enumerate_reps(const Quiver& quiver, const DimVector& dims, const FieldSpec& field, std::uint64_t cap) {
  return RepEnumerator(quiver, dims, field, cap);
}

BigInt gl_order(std::uint64_t n, std::uint64_t q) {
  BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
  BigInt order = 1;
  BigInt qi = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

BigInt group_order(const DimVector& dims, std::uint64_t q) {
  BigInt order = 1;
  for (auto n : dims.n) order *= gl_order(static_cast<std::uint64_t>(n), q);
  return order;
}

BigInt count_classes_stabilizer(const Quiver& quiver, const DimVector& dims, const FieldSpec& field,
                                std::uint64_t cap, unsigned jobs) {
  const RepEnumerator space(quiver, dims, field, cap);
  const BigInt q = field.q();
  jobs = std::max(1u, jobs);
  const std::uint64_t n = space.size();
  const std::uint64_t chunk = (n + jobs - 1) / jobs;

  // Sum of unit-group sizes q^m - q^(m-1); exact, so the reduction is order-free.
  std::vector<BigInt> partial(jobs);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = std::min(n, w * chunk), hi = std::min(n, lo + chunk);
    BigInt acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      auto verdict = decide_abs_indec(space.at(i));
      if (!verdict.is_abs_indec()) continue;
      BigInt qm1 = boost::multiprecision::pow(q, static_cast<unsigned>(verdict.end_dim - 1));
      acc += qm1 * q - qm1;
    }
    partial[w] = std::move(acc);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (const auto& p : partial) total += p;

  const BigInt g = group_order(dims, field.q());
  if (total % g != 0) {
    throw Error(Errc::NonIntegerResult, fmt::format("stabilizer sum {} is not divisible by |G| = {}",
                                                    total.str(), g.str()));
  }
  return total / g;
}

namespace {

struct GroupElement {
  std::vector<MatrixGF> g;
  std::vector<MatrixGF> g_inv;
};

std::vector<std::pair<MatrixGF, MatrixGF>> general_linear(const FieldSpec& f, std::size_t n) {
  std::vector<std::pair<MatrixGF, MatrixGF>> out;
  const std::uint64_t q = f.q();
  const std::uint64_t total = saturating_pow(q, n * n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    MatrixGF m(n, n);
    std::uint64_t x = idx;
    for (std::size_t i = n * n; i-- > 0;) {
      m.entries()[i] = FieldElement(static_cast<std::uint32_t>(x % q));
      x /= q;
    }
    if (auto inv = inverse(f, m)) out.emplace_back(std::move(m), std::move(*inv));
  }
  return out;
}

}  // namespace

BigInt count_classes_canonical(const Quiver& quiver, const DimVector& dims, const FieldSpec& field,
                               std::uint64_t cap_states, std::uint64_t cap_group) {
  const RepEnumerator space(quiver, dims, field, cap_states);
  const BigInt order = group_order(dims, field.q());
  if (order > cap_group) {
    throw Error(Errc::TooLarge, fmt::format("|G| = {} exceeds group cap {}", order.str(), cap_group));
  }

  std::vector<std::vector<std::pair<MatrixGF, MatrixGF>>> per_vertex;
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
    per_vertex.push_back(general_linear(field, static_cast<std::size_t>(dims[v])));
  }

  std::vector<bool> visited(space.size(), false);
  std::set<VectorGF> canonical_forms;
  std::vector<std::size_t> choice(quiver.vertex_count());

  for (std::uint64_t index = 0; index < space.size(); ++index) {
    if (visited[index]) continue;
    const auto rep = space.at(index);
    const bool indec = decide_abs_indec(rep).is_abs_indec();

    // Walk the whole G-orbit, marking it and keeping its least element.
    VectorGF least = rep.entries();
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      VectorGF image;
      image.reserve(space.entry_count());
      for (std::size_t e = 0; e < quiver.edge_count(); ++e) {
        const auto& edge = quiver.edges()[e];
        const auto& gw = per_vertex[edge.head][choice[edge.head]].first;
        const auto& gv_inv = per_vertex[edge.tail][choice[edge.tail]].second;
        auto m = multiply(field, multiply(field, gw, rep.map(e)), gv_inv);
        image.insert(image.end(), m.entries().begin(), m.entries().end());
      }
      visited[space.index_of(image)] = true;
      if (image < least) least = std::move(image);

      std::size_t v = quiver.vertex_count();
      while (v-- > 0) {
        if (++choice[v] < per_vertex[v].size()) break;
        choice[v] = 0;
      }
      if (v == static_cast<std::size_t>(-1)) break;
    }
    if (indec && !canonical_forms.insert(std::move(least)).second) {
      throw Error(Errc::NonIntegerResult, "two orbits share a canonical form");
    }
  }
  return BigInt(canonical_forms.size());
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<BigRational> lagrange_rational(const std::vector<std::pair<BigInt, BigInt>>& points) {
  const std::size_t n = points.size();
  std::vector<BigRational> result(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * BigRational(points[j].first);
      }
      basis = std::move(next);
      denom *= BigRational(points[i].first - points[j].first);
    }
    const BigRational scale = BigRational(points[i].second) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
  }
  return result;
}

KacInterpolation interpolate_kac(const KacCountTable& table, std::int64_t norm,
                                 std::optional<BigInt> expected_multiplicity) {
  const long expected_degree = 1 - static_cast<long>(norm);
  if (static_cast<long>(table.rows.size()) < expected_degree + 1) {
    throw Error(Errc::InsufficientPoints, fmt::format("degree {} needs {} points, table has {}", expected_degree,
                                                      expected_degree + 1, table.rows.size()));
  }
  std::vector<std::pair<BigInt, BigInt>> points;
  std::set<std::uint64_t> seen;
  for (const auto& [q, count] : table.rows) {
    if (!seen.insert(q).second) throw Error(Errc::InvalidArgument, fmt::format("q = {} repeated in table", q));
    points.emplace_back(BigInt(q), count);
  }
  auto rational = lagrange_rational(points);

  KacInterpolation out;
  for (const auto& c : rational) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw Error(Errc::NonIntegerCoefficients, "interpolant has a non-integer coefficient");
    }
    out.polynomial.coeffs.push_back(boost::multiprecision::numerator(c));
  }
  while (!out.polynomial.coeffs.empty() && out.polynomial.coeffs.back() == 0) out.polynomial.coeffs.pop_back();

  auto& d = out.diagnostics;
  const auto& coeffs = out.polynomial.coeffs;
  d.integer_coefficients = true;
  d.monic = !coeffs.empty() && coeffs.back() == 1;
  d.expected_degree = expected_degree;
  d.degree_matches = out.polynomial.degree() == expected_degree;
  d.nonnegative = std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c >= 0; });
  d.constant_term = coeffs.empty() ? BigInt(0) : coeffs.front();
  if (expected_multiplicity) d.constant_matches_multiplicity = d.constant_term == *expected_multiplicity;
  return out;
}

std::vector<OrientationCount> orientation_sweep(const std::vector<std::string>& vertices,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                                const DimVector& dims, const FieldSpec& field, std::uint64_t cap,
                                                unsigned jobs) {
  if (edges.size() >= 63) throw Error(Errc::TooLarge, "too many edges to sweep orientations");
  const std::uint64_t orientations = std::uint64_t{1} << edges.size();
  std::vector<Edge> base;
  for (const auto& [a, b] : edges) base.push_back({a, b});
  const std::uint64_t states = saturating_pow(field.q(), entry_count(Quiver(vertices, base), dims));
  if (states > cap / orientations) {
    throw Error(Errc::TooLarge, fmt::format("{} orientations x {} states exceed cap {}", orientations, states, cap));
  }

  std::vector<OrientationCount> out;
  for (std::uint64_t mask = 0; mask < orientations; ++mask) {
    std::vector<Edge> oriented = base;
    for (std::size_t j = 0; j < oriented.size(); ++j) {
      if (mask >> j & 1) std::swap(oriented[j].tail, oriented[j].head);
    }
    Quiver quiver(vertices, std::move(oriented));
    auto count = count_classes_stabilizer(quiver, dims, field, cap, jobs);
    out.push_back({std::move(quiver), std::move(count)});
  }
  return out;
}

}  // namespace qrep

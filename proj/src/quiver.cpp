#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <fmt/format.h>

#include "qrep/rep.hpp"

namespace qrep {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw Error(Errc::InvalidArgument, fmt::format("duplicate vertex '{}'", v));
  }
  for (const auto& e : edges_) {
    if (e.tail >= vertices_.size() || e.head >= vertices_.size()) {
      throw Error(Errc::UnknownVertex, "edge endpoint outside the vertex list");
    }
  }
}

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
    : Quiver(std::move(vertices), std::vector<Edge>{}) {
  for (const auto& [tail, head] : edges) edges_.push_back({index_of(tail), index_of(head)});
}

std::size_t Quiver::index_of(std::string_view id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw Error(Errc::UnknownVertex, fmt::format("unknown vertex '{}'", id));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Quiver::has_self_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Quiver::has_self_loop_at(std::size_t v) const {
  return std::any_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.is_loop() && e.tail == v; });
}

bool Quiver::is_sink(std::size_t v) const {
  return std::none_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.tail == v; });
}

bool Quiver::is_source(std::size_t v) const {
  return std::none_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.head == v; });
}

Quiver Quiver::reflected_at(std::size_t v) const {
  Quiver out = *this;
  for (auto& e : out.edges_) {
    if (e.tail == v || e.head == v) std::swap(e.tail, e.head);
  }
  return out;
}

Quiver linear_quiver(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back(fmt::format("v{}", i + 1));
    if (i > 0) es.push_back({i - 1, i});
  }
  return Quiver(std::move(vs), std::move(es));
}

Quiver generalized_kronecker(std::size_t m) {
  return Quiver({"v1", "v2"}, std::vector<Edge>(m, Edge{0, 1}));
}

Quiver jordan_quiver() { return Quiver({"v1"}, std::vector<Edge>{{0, 0}}); }

std::int64_t DimVector::total() const { return std::accumulate(n.begin(), n.end(), std::int64_t{0}); }

bool DimVector::is_zero() const {
  return std::all_of(n.begin(), n.end(), [](std::int64_t x) { return x == 0; });
}

bool DimVector::is_nonnegative() const {
  return std::all_of(n.begin(), n.end(), [](std::int64_t x) { return x >= 0; });
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw Error(Errc::VertexMismatch, "dimension vectors of different length");
  DimVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

std::size_t entry_count(const Quiver& quiver, const DimVector& dims) {
  if (dims.size() != quiver.vertex_count()) {
    throw Error(Errc::VertexMismatch, fmt::format("{} dimensions for {} vertices", dims.size(), quiver.vertex_count()));
  }
  if (!dims.is_nonnegative()) throw Error(Errc::NegativeCoordinate, "negative dimension");
  std::size_t total = 0;
  for (const auto& e : quiver.edges()) total += static_cast<std::size_t>(dims[e.tail] * dims[e.head]);
  return total;
}

Representation::Representation(Quiver quiver, FieldSpec field, DimVector dims, std::vector<MatrixGF> maps)
    : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_.vertex_count()) {
    throw Error(Errc::VertexMismatch,
                fmt::format("{} dimensions for {} vertices", dims_.size(), quiver_.vertex_count()));
  }
  if (!dims_.is_nonnegative()) throw Error(Errc::NegativeCoordinate, "negative dimension in representation");
  if (maps_.size() != quiver_.edge_count()) {
    throw Error(Errc::ShapeMismatch, fmt::format("{} maps for {} edges", maps_.size(), quiver_.edge_count()));
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto& e = quiver_.edges()[i];
    const auto rows = dim_at(e.head), cols = dim_at(e.tail);
    if (maps_[i].rows() != rows || maps_[i].cols() != cols) {
      throw Error(Errc::ShapeMismatch, fmt::format("map {} is {}x{}, expected {}x{}", i, maps_[i].rows(),
                                                   maps_[i].cols(), rows, cols));
    }
    for (auto x : maps_[i].entries()) {
      if (!field_.contains(x)) throw Error(Errc::MixedFields, fmt::format("map {} has an entry outside the field", i));
    }
  }
}

Representation Representation::zero_maps(Quiver quiver, FieldSpec field, DimVector dims) {
  qrep::entry_count(quiver, dims);
  std::vector<MatrixGF> maps;
  for (const auto& e : quiver.edges()) {
    maps.emplace_back(static_cast<std::size_t>(dims[e.head]), static_cast<std::size_t>(dims[e.tail]));
  }
  return Representation(std::move(quiver), std::move(field), std::move(dims), std::move(maps));
}

Representation Representation::assemble(Quiver quiver, FieldSpec field, DimVector dims,
                                        std::span<const FieldElement> entries) {
  if (entries.size() != qrep::entry_count(quiver, dims)) {
    throw Error(Errc::LengthMismatch,
                fmt::format("{} entries given, {} needed", entries.size(), qrep::entry_count(quiver, dims)));
  }
  std::vector<MatrixGF> maps;
  std::size_t offset = 0;
  for (const auto& e : quiver.edges()) {
    const auto rows = static_cast<std::size_t>(dims[e.head]), cols = static_cast<std::size_t>(dims[e.tail]);
    maps.emplace_back(rows, cols, VectorGF(entries.begin() + static_cast<std::ptrdiff_t>(offset),
                                           entries.begin() + static_cast<std::ptrdiff_t>(offset + rows * cols)));
    offset += rows * cols;
  }
  return Representation(std::move(quiver), std::move(field), std::move(dims), std::move(maps));
}

std::size_t Representation::total_dim() const { return static_cast<std::size_t>(dims_.total()); }

std::size_t Representation::entry_count() const { return qrep::entry_count(quiver_, dims_); }

VectorGF Representation::entries() const {
  VectorGF out;
  for (const auto& m : maps_) out.insert(out.end(), m.entries().begin(), m.entries().end());
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.quiver() == b.quiver())) throw Error(Errc::QuiverMismatch, "direct sum over different quivers");
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "direct sum over different fields");
  std::vector<MatrixGF> maps;
  for (std::size_t e = 0; e < a.maps().size(); ++e) {
    const MatrixGF blocks[] = {a.map(e), b.map(e)};
    maps.push_back(block_diagonal(blocks));
  }
  return Representation(a.quiver(), a.field(), a.dims() + b.dims(), std::move(maps));
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

Representation random_rep(const Quiver& quiver, const DimVector& dims, const FieldSpec& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t q = field.q();
  // rejection keeps the draw uniform and independent of the library's distributions
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % q;
  VectorGF entries(entry_count(quiver, dims));
  for (auto& x : entries) {
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    x = FieldElement(static_cast<std::uint32_t>(r % q));
  }
  return Representation::assemble(quiver, field, dims, entries);
}

}  // namespace qrep

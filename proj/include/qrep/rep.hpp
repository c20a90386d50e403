#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/linalg.hpp"

namespace qrep {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Oriented multigraph. Vertex and edge order are part of the identity: they
/// fix the unknown ordering of End and the entry ordering of representations.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Edge> edges);
  Quiver(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view id) const;

  bool has_self_loop() const;
  bool has_self_loop_at(std::size_t v) const;
  bool is_sink(std::size_t v) const;
  bool is_source(std::size_t v) const;

  /// Same graph with every edge incident to v reversed, in place.
  Quiver reflected_at(std::size_t v) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// v1 -> v2 -> ... -> vn
Quiver linear_quiver(std::size_t n);
/// Two vertices, m parallel arrows v1 -> v2. m = 2 is the Kronecker quiver.
Quiver generalized_kronecker(std::size_t m);
/// One vertex with one loop.
Quiver jordan_quiver();

/// Coordinates in the vertex order of a quiver. Signed so that Weyl
/// reflections may leave the positive cone.
struct DimVector {
  std::vector<std::int64_t> n;

  DimVector() = default;
  DimVector(std::initializer_list<std::int64_t> values) : n(values) {}
  explicit DimVector(std::vector<std::int64_t> values) : n(std::move(values)) {}

  std::size_t size() const { return n.size(); }
  std::int64_t operator[](std::size_t i) const { return n[i]; }
  std::int64_t& operator[](std::size_t i) { return n[i]; }
  std::int64_t total() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

DimVector operator+(const DimVector& a, const DimVector& b);

/// A representation: one n_head x n_tail matrix per edge, in edge order.
class Representation {
 public:
  Representation(Quiver quiver, FieldSpec field, DimVector dims, std::vector<MatrixGF> maps);

  /// All maps zero.
  static Representation zero_maps(Quiver quiver, FieldSpec field, DimVector dims);

  /// Maps filled from a flat entry list: edge order, then row-major.
  static Representation assemble(Quiver quiver, FieldSpec field, DimVector dims, std::span<const FieldElement> entries);

  const Quiver& quiver() const { return quiver_; }
  const FieldSpec& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  const std::vector<MatrixGF>& maps() const { return maps_; }
  const MatrixGF& map(std::size_t edge) const { return maps_[edge]; }

  std::size_t dim_at(std::size_t v) const { return static_cast<std::size_t>(dims_[v]); }
  std::size_t total_dim() const;
  /// M_alpha: number of matrix entries over all edges.
  std::size_t entry_count() const;
  VectorGF entries() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.quiver_ == b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  Quiver quiver_;
  FieldSpec field_;
  DimVector dims_;
  std::vector<MatrixGF> maps_;
};

/// Number of matrix entries sum over edges of n_tail * n_head.
std::size_t entry_count(const Quiver& quiver, const DimVector& dims);

/// One n_v x n_v block per vertex.
using EndElement = std::vector<MatrixGF>;

struct EndAlgebra {
  Representation rep;
  std::vector<EndElement> basis;
  std::size_t m() const { return basis.size(); }
};

/// Kernel of the commutation equations a_head * pi = pi * a_tail, one block
/// tuple per free unknown. Throws ZeroDimension when all n_v = 0.
EndAlgebra end_basis(const Representation& rep);

/// The gamma with every block minus gamma*I nilpotent, if one exists in the
/// field. Candidates are tried in enumeration order.
std::optional<FieldElement> qn_test(const FieldSpec& field, const EndElement& a, std::size_t total_dim);

struct LieSeries {
  bool nilpotent = false;
  std::vector<std::size_t> dims;  // dim g^1, dim g^2, ...
};

LieSeries lie_nilpotency(const FieldSpec& field, const EndAlgebra& algebra);

enum class Decision { AbsIndec, NotAbsIndec };
enum class NegativeReason { None, ZeroDimension, BasisElementNotQn, LieNotNilpotent };

struct IndecVerdict {
  Decision decision = Decision::NotAbsIndec;
  NegativeReason reason = NegativeReason::None;
  std::size_t failing_index = 0;     // BasisElementNotQn
  std::vector<std::size_t> series;   // LieNotNilpotent, and the series on success
  std::vector<FieldElement> eig_values;  // AbsIndec only
  std::size_t end_dim = 0;

  bool is_abs_indec() const { return decision == Decision::AbsIndec; }
};

IndecVerdict decide_abs_indec(const Representation& rep);

/// Brute force: every F_q-combination of the basis is quasi-nilpotent.
/// Throws TooLarge if q^m > cap.
bool all_elements_qn_oracle(const EndAlgebra& algebra, std::uint64_t cap);

/// Throws QuiverMismatch / FieldMismatch.
Representation direct_sum(const Representation& a, const Representation& b);

/// BGP reflection at a sink (kernel) or source (cokernel). The result lives
/// on quiver().reflected_at(v). Throws NotSinkOrSource, SelfLoopAtV.
Representation reflect_functor(const Representation& rep, std::size_t v);

/// Lexicographically first absolutely indecomposable representation whose
/// entries agree with `fixed` (flat entry index -> value). Free entries are
/// searched in entry order with values in field enumeration order.
/// Throws TooLarge if q^(free entries) > cap.
std::optional<Representation> find_abs_indec(const Quiver& quiver, const DimVector& dims, const FieldSpec& field,
                                             const std::map<std::size_t, FieldElement>& fixed, std::uint64_t cap);

/// Entries drawn uniformly from a seeded mt19937_64.
Representation random_rep(const Quiver& quiver, const DimVector& dims, const FieldSpec& field, std::uint64_t seed);

/// q^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace qrep

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrep/rep.hpp"

namespace qrep {

/// Symmetric Cartan matrix of a loop-free graph: 2 on the diagonal, minus the
/// number of edges between u and v off it. Orientation is ignored.
struct CartanData {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::int64_t>> a;

  std::size_t size() const { return vertices.size(); }
};

/// Throws SelfLoopPresent.
CartanData cartan(const Quiver& quiver);

/// A value in (1/2)Z, held as its double.
struct HalfInteger {
  std::int64_t twice = 0;

  bool is_integer() const { return twice % 2 == 0; }
  std::string to_string() const;
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

/// (alpha|beta) = sum n_u m_v a_uv / 2. Throws VertexMismatch.
HalfInteger bilinear(const CartanData& c, const DimVector& alpha, const DimVector& beta);

/// r_v(alpha) = alpha - 2(alpha|alpha_v) alpha_v. Throws UnknownVertex.
DimVector reflect_simple(const CartanData& c, std::size_t v, const DimVector& alpha);

DimVector simple_root(std::size_t rank, std::size_t v);

enum class RootVerdict { NotPositiveRoot, Real, Imaginary };

std::string_view root_verdict_name(RootVerdict v);

struct RootClassification {
  RootVerdict verdict = RootVerdict::NotPositiveRoot;
  std::vector<std::size_t> word;  // reflections applied to the input, in order
  DimVector core;                 // simple root (Real), fundamental-region element (Imaginary)
  std::int64_t norm = 0;          // (alpha|alpha)
};

/// Height descent: reflect at the first vertex with (alpha|alpha_v) > 0 until a
/// simple root, a vector outside Q+, or the fundamental region is reached.
/// Throws ZeroVector, NegativeCoordinate, VertexMismatch.
RootClassification classify(const CartanData& c, const DimVector& alpha);

/// Applies the word in reverse to the core; reproduces the classified vector.
DimVector unwind(const CartanData& c, const RootClassification& rc);

/// Real positive roots of height at most height_bound, sorted.
std::vector<DimVector> real_roots_up_to(const CartanData& c, std::int64_t height_bound);

/// Whether supp(alpha) is connected in the underlying graph.
bool support_connected(const CartanData& c, const DimVector& alpha);

struct SchurProbe {
  std::size_t min_end_dim = 0;
  std::size_t indec_count = 0;
  std::size_t samples = 0;
  double fraction() const { return samples ? static_cast<double>(indec_count) / static_cast<double>(samples) : 0.0; }
};

/// Samples `samples` random representations (seeds seed, seed+1, ...).
/// min_end_dim == 1 certifies a Schur vector; larger values are only evidence.
SchurProbe schur_probe(const Quiver& quiver, const DimVector& alpha, const FieldSpec& field, std::size_t samples,
                       std::uint64_t seed);

}  // namespace qrep

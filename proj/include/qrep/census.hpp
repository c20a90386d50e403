#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qrep/rep.hpp"

namespace qrep {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;
inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

/// All q^M representations of a dimension vector, in entry-lexicographic order
/// (the last entry of the last edge varies fastest).
class RepEnumerator {
 public:
  /// Throws TooLarge if q^M > cap.
  RepEnumerator(Quiver quiver, DimVector dims, FieldSpec field, std::uint64_t cap = kDefaultStateCap);

  std::uint64_t size() const { return size_; }
  std::size_t entry_count() const { return entries_; }
  Representation at(std::uint64_t index) const;
  VectorGF entries_at(std::uint64_t index) const;
  /// Inverse of entries_at.
  std::uint64_t index_of(const VectorGF& entries) const;
  std::optional<Representation> next();

  const Quiver& quiver() const { return quiver_; }
  const DimVector& dims() const { return dims_; }
  const FieldSpec& field() const { return field_; }

 private:
  Quiver quiver_;
  DimVector dims_;
  FieldSpec field_;
  std::size_t entries_ = 0;
  std::uint64_t size_ = 0;
  std::uint64_t cursor_ = 0;
};

RepEnumerator enumerate_reps(const Quiver& quiver, const DimVector& dims, const FieldSpec& field,
                             std::uint64_t cap = kDefaultStateCap);

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i)
BigInt gl_order(std::uint64_t n, std::uint64_t q);
/// prod_v |GL_{n_v}(F_q)|
BigInt group_order(const DimVector& dims, std::uint64_t q);

/// Sum over absolutely indecomposable reps of (q^m - q^(m-1)) / |G|, where
/// m = dim End. Each orbit contributes exactly 1. Throws TooLarge, and
/// NonIntegerResult if the sum is not an integer.
BigInt count_classes_stabilizer(const Quiver& quiver, const DimVector& dims, const FieldSpec& field,
                                std::uint64_t cap = kDefaultStateCap, unsigned jobs = 1);

/// Distinct lexicographically least orbit elements under
/// (g . pi)_e = g_head pi_e g_tail^-1, over absolutely indecomposable reps.
BigInt count_classes_canonical(const Quiver& quiver, const DimVector& dims, const FieldSpec& field,
                               std::uint64_t cap_states = kDefaultStateCap, std::uint64_t cap_group = kDefaultGroupCap);

struct KacCountTable {
  Quiver quiver;
  DimVector alpha;
  std::vector<std::pair<std::uint64_t, BigInt>> rows;  // (q, class count)
};

/// Integer polynomial in q, lowest degree first, no trailing zeros.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  BigInt eval(const BigInt& x) const;
  /// e.g. "q^2 + q + 1"
  std::string to_string(const std::string& var = "q") const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

struct KacDiagnostics {
  bool integer_coefficients = false;
  bool monic = false;
  long expected_degree = 0;  // 1 - (alpha|alpha)
  bool degree_matches = false;
  bool nonnegative = false;
  BigInt constant_term;
  std::optional<bool> constant_matches_multiplicity;

  bool all_pass() const {
    return integer_coefficients && monic && degree_matches && nonnegative && constant_matches_multiplicity.value_or(true);
  }
};

struct KacInterpolation {
  IntPolynomial polynomial;
  KacDiagnostics diagnostics;
};

/// Exact Lagrange interpolation through every row. Throws InsufficientPoints
/// when fewer than 2 - norm rows are given, NonIntegerCoefficients when the
/// interpolant is not in Z[q].
KacInterpolation interpolate_kac(const KacCountTable& table, std::int64_t norm,
                                 std::optional<BigInt> expected_multiplicity = std::nullopt);

/// Lagrange interpolation over Q, unchecked.
std::vector<BigRational> lagrange_rational(const std::vector<std::pair<BigInt, BigInt>>& points);

struct OrientationCount {
  Quiver quiver;
  BigInt count;
};

/// Counts classes for each of the 2^E orientations of an undirected multigraph.
/// Orientation i reverses edge j when bit j of i is set. Throws TooLarge when
/// 2^E * q^M exceeds cap.
std::vector<OrientationCount> orientation_sweep(const std::vector<std::string>& vertices,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                                const DimVector& dims, const FieldSpec& field,
                                                std::uint64_t cap = kDefaultStateCap, unsigned jobs = 1);

}  // namespace qrep

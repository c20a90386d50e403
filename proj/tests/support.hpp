#pragma once

// Seeded generators and brute-force oracles shared by the unit tests. The
// oracles deliberately avoid the library's elimination and decision code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "qrep/census.hpp"
#include "qrep/field.hpp"
#include "qrep/linalg.hpp"
#include "qrep/rep.hpp"

namespace qrep::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  FieldElement element(const FieldSpec& f) { return FieldElement(static_cast<std::uint32_t>(below(f.q()))); }
  FieldElement nonzero(const FieldSpec& f) { return FieldElement(static_cast<std::uint32_t>(1 + below(f.q() - 1))); }

  MatrixGF matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) {
    MatrixGF m(rows, cols);
    for (auto& x : m.entries()) x = element(f);
    return m;
  }

  /// Sparse-ish matrix so that low rank shows up often.
  MatrixGF sparse_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) {
    MatrixGF m(rows, cols);
    for (auto& x : m.entries()) x = below(3) == 0 ? element(f) : FieldSpec::zero();
    return m;
  }

  VectorGF vector(const FieldSpec& f, std::size_t n) {
    VectorGF v(n);
    for (auto& x : v) x = element(f);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<FieldSpec> small_fields() {
  return {FieldSpec::make(2, 1), FieldSpec::make(3, 1), FieldSpec::make(5, 1), FieldSpec::make(2, 2),
          FieldSpec::make(2, 3), FieldSpec::make(3, 2)};
}

inline VectorGF mat_vec(const FieldSpec& f, const MatrixGF& m, const VectorGF& x) {
  VectorGF y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] = f.add(y[i], f.mul(m(i, j), x[j]));
  }
  return y;
}

inline MatrixGF naive_mul(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b) {
  MatrixGF c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElement s;
      for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  }
  return c;
}

/// Calls fn on every vector of GF(q)^n.
template <class Fn>
void for_each_vector(const FieldSpec& f, std::size_t n, Fn&& fn) {
  VectorGF v(n);
  while (true) {
    fn(static_cast<const VectorGF&>(v));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i].index() + 1 < f.q()) {
        v[i] = FieldElement(v[i].index() + 1);
        break;
      }
      v[i] = FieldElement(0);
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

/// |{x : m x = 0}| by enumeration.
inline std::uint64_t brute_kernel_size(const FieldSpec& f, const MatrixGF& m) {
  std::uint64_t count = 0;
  for_each_vector(f, m.cols(), [&](const VectorGF& x) {
    auto y = mat_vec(f, m, x);
    if (std::all_of(y.begin(), y.end(), [](FieldElement e) { return e.is_zero(); })) ++count;
  });
  return count;
}

// Polynomials as coefficient vectors, lowest degree first, untrimmed.
using RawPoly = std::vector<FieldElement>;

inline RawPoly raw_mul(const FieldSpec& f, const RawPoly& a, const RawPoly& b) {
  RawPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

inline RawPoly trim(RawPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

/// det(lambda I - m) by expansion over all permutations.
inline PolyGF permutation_char_poly(const FieldSpec& f, const MatrixGF& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  RawPoly total(n + 1);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    RawPoly term{FieldSpec::one()};
    for (std::size_t i = 0; i < n; ++i) {
      RawPoly entry{f.neg(m(i, perm[i]))};
      if (perm[i] == i) entry.push_back(FieldSpec::one());
      term = raw_mul(f, term, entry);
    }
    if (inversions % 2) {
      for (auto& c : term) c = f.neg(c);
    }
    for (std::size_t i = 0; i < term.size(); ++i) total[i] = f.add(total[i], term[i]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PolyGF{trim(total)};
}

/// dim End by enumerating every block tuple and checking the commutation equations.
inline std::uint64_t brute_end_size(const Representation& rep) {
  const auto& f = rep.field();
  const auto& quiver = rep.quiver();
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) unknowns += rep.dim_at(v) * rep.dim_at(v);
  std::uint64_t count = 0;
  for_each_vector(f, unknowns, [&](const VectorGF& x) {
    std::vector<MatrixGF> blocks;
    std::size_t off = 0;
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
      const auto n = rep.dim_at(v);
      blocks.emplace_back(n, n, VectorGF(x.begin() + static_cast<long>(off), x.begin() + static_cast<long>(off + n * n)));
      off += n * n;
    }
    for (std::size_t e = 0; e < quiver.edge_count(); ++e) {
      const auto& edge = quiver.edges()[e];
      if (naive_mul(f, blocks[edge.head], rep.map(e)) != naive_mul(f, rep.map(e), blocks[edge.tail])) return;
    }
    ++count;
  });
  return count;
}

/// All elements of GL_n(F_q), by enumerating every matrix and keeping the invertible ones.
inline std::vector<MatrixGF> brute_gl(const FieldSpec& f, std::size_t n) {
  std::vector<MatrixGF> out;
  for_each_vector(f, n * n, [&](const VectorGF& x) {
    MatrixGF m(n, n, x);
    // invertible iff m y = 0 has only the trivial solution
    if (brute_kernel_size(f, m) == 1) out.push_back(m);
  });
  return out;
}

/// Number of G-orbits on absolutely indecomposable representations, by
/// computing each orbit as a set.
inline std::uint64_t brute_orbit_count(const Quiver& quiver, const DimVector& dims, const FieldSpec& f) {
  std::vector<std::vector<MatrixGF>> gls, gl_invs;
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
    auto g = brute_gl(f, static_cast<std::size_t>(dims[v]));
    std::vector<MatrixGF> inv;
    for (const auto& m : g) {
      for (const auto& cand : g) {
        if (naive_mul(f, m, cand) == MatrixGF::identity(m.rows())) {
          inv.push_back(cand);
          break;
        }
      }
    }
    gls.push_back(std::move(g));
    gl_invs.push_back(std::move(inv));
  }
  auto reps = enumerate_reps(quiver, dims, f);
  std::set<VectorGF> seen;
  std::uint64_t orbits = 0;
  for (std::uint64_t i = 0; i < reps.size(); ++i) {
    auto entries = reps.entries_at(i);
    if (seen.count(entries)) continue;
    auto rep = reps.at(i);
    const bool good = decide_abs_indec(rep).is_abs_indec();
    // walk the orbit
    std::vector<std::size_t> choice(quiver.vertex_count(), 0);
    while (true) {
      VectorGF image;
      for (std::size_t e = 0; e < quiver.edge_count(); ++e) {
        const auto& edge = quiver.edges()[e];
        auto m = naive_mul(f, naive_mul(f, gls[edge.head][choice[edge.head]], rep.map(e)),
                           gl_invs[edge.tail][choice[edge.tail]]);
        image.insert(image.end(), m.entries().begin(), m.entries().end());
      }
      seen.insert(image);
      std::size_t v = 0;
      for (; v < choice.size(); ++v) {
        if (++choice[v] < gls[v].size()) break;
        choice[v] = 0;
      }
      if (v == choice.size()) break;
    }
    if (good) ++orbits;
  }
  return orbits;
}

}  // namespace qrep::testing

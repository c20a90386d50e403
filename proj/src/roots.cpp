#include "qrep/roots.hpp"

#include <deque>
#include <limits>
#include <set>

#include <fmt/format.h>

namespace qrep {
namespace {

void check_rank(const CartanData& c, const DimVector& alpha) {
  if (alpha.size() != c.size()) {
    throw Error(Errc::VertexMismatch, fmt::format("vector of length {} for {} vertices", alpha.size(), c.size()));
  }
}

// 2(alpha|alpha_v) = sum_u n_u a_uv
std::int64_t pairing_twice(const CartanData& c, const DimVector& alpha, std::size_t v) {
  std::int64_t s = 0;
  for (std::size_t u = 0; u < c.size(); ++u) s += alpha[u] * c.a[u][v];
  return s;
}

std::optional<std::size_t> simple_index(const DimVector& alpha) {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (alpha[i] != 1 || idx) return std::nullopt;
    idx = i;
  }
  return idx;
}

}  // namespace

CartanData cartan(const Quiver& quiver) {
  if (quiver.has_self_loop()) throw Error(Errc::SelfLoopPresent, "Cartan matrix needs a loop-free graph");
  CartanData c;
  c.vertices = quiver.vertices();
  const std::size_t n = quiver.vertex_count();
  c.a.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v) c.a[v][v] = 2;
  for (const auto& e : quiver.edges()) {
    c.a[e.tail][e.head] -= 1;
    c.a[e.head][e.tail] -= 1;
  }
  return c;
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice / 2);
  return fmt::format("{}/2", twice);
}

HalfInteger bilinear(const CartanData& c, const DimVector& alpha, const DimVector& beta) {
  check_rank(c, alpha);
  check_rank(c, beta);
  std::int64_t s = 0;
  for (std::size_t u = 0; u < c.size(); ++u) {
    for (std::size_t v = 0; v < c.size(); ++v) s += alpha[u] * beta[v] * c.a[u][v];
  }
  return HalfInteger{s};
}

DimVector simple_root(std::size_t rank, std::size_t v) {
  DimVector a(std::vector<std::int64_t>(rank, 0));
  a[v] = 1;
  return a;
}

DimVector reflect_simple(const CartanData& c, std::size_t v, const DimVector& alpha) {
  check_rank(c, alpha);
  if (v >= c.size()) throw Error(Errc::UnknownVertex, fmt::format("vertex index {}", v));
  DimVector out = alpha;
  out[v] -= pairing_twice(c, alpha, v);
  return out;
}

std::string_view root_verdict_name(RootVerdict v) {
  switch (v) {
    case RootVerdict::NotPositiveRoot: return "NOT_POSITIVE_ROOT";
    case RootVerdict::Real: return "REAL";
    case RootVerdict::Imaginary: return "IMAGINARY";
  }
  return "?";
}

bool support_connected(const CartanData& c, const DimVector& alpha) {
  check_rank(c, alpha);
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    if (alpha[v] != 0) support.push_back(v);
  }
  if (support.empty()) return false;
  std::vector<bool> seen(c.size(), false);
  std::deque<std::size_t> queue{support.front()};
  seen[support.front()] = true;
  std::size_t reached = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    ++reached;
    for (auto w : support) {
      if (!seen[w] && c.a[u][w] < 0) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return reached == support.size();
}

RootClassification classify(const CartanData& c, const DimVector& alpha) {
  check_rank(c, alpha);
  if (!alpha.is_nonnegative()) throw Error(Errc::NegativeCoordinate, "classify needs alpha in Q+");
  if (alpha.is_zero()) throw Error(Errc::ZeroVector, "classify needs alpha != 0");

  RootClassification rc;
  rc.norm = bilinear(c, alpha, alpha).twice / 2;
  DimVector cur = alpha;
  while (true) {
    if (simple_index(cur)) {
      rc.verdict = RootVerdict::Real;
      rc.core = cur;
      return rc;
    }
    std::optional<std::size_t> descend;
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (pairing_twice(c, cur, v) > 0) {
        descend = v;
        break;
      }
    }
    if (!descend) {
      rc.verdict = support_connected(c, cur) ? RootVerdict::Imaginary : RootVerdict::NotPositiveRoot;
      rc.core = cur;
      return rc;
    }
    DimVector next = reflect_simple(c, *descend, cur);
    if (!next.is_nonnegative()) {
      rc.verdict = RootVerdict::NotPositiveRoot;
      rc.core = cur;
      return rc;
    }
    rc.word.push_back(*descend);
    cur = std::move(next);
  }
}

DimVector unwind(const CartanData& c, const RootClassification& rc) {
  DimVector cur = rc.core;
  for (std::size_t i = rc.word.size(); i-- > 0;) cur = reflect_simple(c, rc.word[i], cur);
  return cur;
}

std::vector<DimVector> real_roots_up_to(const CartanData& c, std::int64_t height_bound) {
  if (height_bound < 1) throw Error(Errc::InvalidArgument, "height bound must be at least 1");
  std::set<DimVector> found;
  std::deque<DimVector> queue;
  for (std::size_t v = 0; v < c.size(); ++v) {
    auto s = simple_root(c.size(), v);
    found.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    DimVector cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < c.size(); ++v) {
      DimVector next = reflect_simple(c, v, cur);
      if (!next.is_nonnegative() || next.total() > height_bound) continue;
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

SchurProbe schur_probe(const Quiver& quiver, const DimVector& alpha, const FieldSpec& field, std::size_t samples,
                       std::uint64_t seed) {
  if (samples == 0) throw Error(Errc::InvalidArgument, "schur probe needs at least one sample");
  if (alpha.is_zero()) throw Error(Errc::ZeroVector, "schur probe needs alpha != 0");
  SchurProbe out;
  out.samples = samples;
  out.min_end_dim = std::numeric_limits<std::size_t>::max();
  for (std::size_t s = 0; s < samples; ++s) {
    auto rep = random_rep(quiver, alpha, field, seed + s);
    auto verdict = decide_abs_indec(rep);
    out.min_end_dim = std::min(out.min_end_dim, verdict.end_dim);
    if (verdict.is_abs_indec()) ++out.indec_count;
  }
  return out;
}

}  // namespace qrep

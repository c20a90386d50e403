#include <fmt/format.h>

#include "qrep/rep.hpp"

namespace qrep {
namespace {

VectorGF flatten(const EndElement& a) {
  VectorGF out;
  for (const auto& block : a) out.insert(out.end(), block.entries().begin(), block.entries().end());
  return out;
}

EndElement unflatten(const VectorGF& v, const DimVector& dims) {
  EndElement out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const auto n = static_cast<std::size_t>(dims[i]);
    out.emplace_back(n, n, VectorGF(v.begin() + static_cast<std::ptrdiff_t>(offset),
                                    v.begin() + static_cast<std::ptrdiff_t>(offset + n * n)));
    offset += n * n;
  }
  return out;
}

EndElement bracket(const FieldSpec& f, const EndElement& a, const EndElement& b) {
  EndElement out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(commutator(f, a[i], b[i]));
  return out;
}

}  // namespace

EndAlgebra end_basis(const Representation& rep) {
  const auto& quiver = rep.quiver();
  const auto& f = rep.field();
  if (rep.total_dim() == 0) throw Error(Errc::ZeroDimension, "End of the zero representation");

  // Unknowns: entries of a_v, by vertex then row-major.
  std::vector<std::size_t> offset(quiver.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) offset[v + 1] = offset[v] + rep.dim_at(v) * rep.dim_at(v);
  const std::size_t unknowns = offset.back();

  // Equations: a_head * pi - pi * a_tail = 0, by edge then row-major (i, j).
  MatrixGF system(rep.entry_count(), unknowns);
  std::size_t row = 0;
  for (std::size_t e = 0; e < quiver.edge_count(); ++e) {
    const auto& edge = quiver.edges()[e];
    const auto& pi = rep.map(e);
    const std::size_t nv = rep.dim_at(edge.tail), nw = rep.dim_at(edge.head);
    for (std::size_t i = 0; i < nw; ++i) {
      for (std::size_t j = 0; j < nv; ++j, ++row) {
        auto eq = system.row(row);
        for (std::size_t k = 0; k < nw; ++k) {
          auto& c = eq[offset[edge.head] + i * nw + k];
          c = f.add(c, pi(k, j));
        }
        for (std::size_t k = 0; k < nv; ++k) {
          auto& c = eq[offset[edge.tail] + k * nv + j];
          c = f.sub(c, pi(i, k));
        }
      }
    }
  }

  auto kernel = kernel_basis(f, system);
  EndAlgebra out{rep, {}};
  out.basis.reserve(kernel.size());
  for (auto& v : kernel) {
    out.basis.push_back(unflatten(v, rep.dims()));
    VectorGF().swap(v);
  }
  return out;
}

std::optional<FieldElement> qn_test(const FieldSpec& f, const EndElement& a, std::size_t total_dim) {
  std::size_t n = 0;
  for (const auto& block : a) {
    if (!block.is_square()) throw Error(Errc::ShapeMismatch, "endomorphism block is not square");
    n += block.rows();
  }
  if (n != total_dim) throw Error(Errc::ShapeMismatch, fmt::format("blocks cover {} of {} dimensions", n, total_dim));
  if (total_dim == 0) throw Error(Errc::ZeroDimension, "quasi-nilpotency of a zero-dimensional endomorphism");

  // A - gamma I is block diagonal, so it is nilpotent iff every block is.
  for (FieldElement gamma : f.enumerate()) {
    bool all = true;
    for (const auto& block : a) {
      if (block.rows() == 0) continue;
      MatrixGF shifted = block;
      for (std::size_t i = 0; i < block.rows(); ++i) shifted(i, i) = f.sub(shifted(i, i), gamma);
      if (!is_nilpotent(f, shifted)) {
        all = false;
        break;
      }
    }
    if (all) return gamma;
  }
  return std::nullopt;
}

LieSeries lie_nilpotency(const FieldSpec& f, const EndAlgebra& algebra) {
  LieSeries out;
  const auto& dims = algebra.rep.dims();
  std::vector<EndElement> layer = algebra.basis;
  out.dims.push_back(layer.size());
  if (layer.empty()) {
    out.nilpotent = true;
    return out;
  }
  for (std::size_t step = 0; step < algebra.m(); ++step) {
    std::vector<VectorGF> brackets;
    brackets.reserve(algebra.m() * layer.size());
    for (const auto& a : algebra.basis) {
      for (const auto& b : layer) brackets.push_back(flatten(bracket(f, a, b)));
    }
    auto next = span_basis(f, brackets);
    out.dims.push_back(next.dim);
    if (next.dim == 0) {
      out.nilpotent = true;
      return out;
    }
    // g^j is contained in g^(j-1); equal dimension means the series is stuck
    if (next.dim == layer.size()) {
      out.nilpotent = false;
      return out;
    }
    layer.clear();
    for (const auto& v : next.basis) layer.push_back(unflatten(v, dims));
  }
  out.nilpotent = false;
  return out;
}

IndecVerdict decide_abs_indec(const Representation& rep) {
  IndecVerdict verdict;
  if (rep.total_dim() == 0) {
    verdict.reason = NegativeReason::ZeroDimension;
    return verdict;
  }
  const auto& f = rep.field();
  const auto algebra = end_basis(rep);
  verdict.end_dim = algebra.m();

  std::vector<FieldElement> eig;
  eig.reserve(algebra.m());
  for (std::size_t i = 0; i < algebra.m(); ++i) {
    auto gamma = qn_test(f, algebra.basis[i], rep.total_dim());
    if (!gamma) {
      verdict.reason = NegativeReason::BasisElementNotQn;
      verdict.failing_index = i;
      return verdict;
    }
    eig.push_back(*gamma);
  }

  auto series = lie_nilpotency(f, algebra);
  verdict.series = series.dims;
  if (!series.nilpotent) {
    verdict.reason = NegativeReason::LieNotNilpotent;
    return verdict;
  }
  verdict.decision = Decision::AbsIndec;
  verdict.eig_values = std::move(eig);
  return verdict;
}

bool all_elements_qn_oracle(const EndAlgebra& algebra, std::uint64_t cap) {
  const auto& f = algebra.rep.field();
  const std::uint64_t q = f.q();
  const std::size_t m = algebra.m();
  const std::uint64_t total = saturating_pow(q, m);
  if (total > cap) throw Error(Errc::TooLarge, fmt::format("{}^{} combinations exceed cap {}", q, m, cap));

  const auto& dims = algebra.rep.dims();
  const std::size_t n = algebra.rep.total_dim();
  std::vector<std::uint32_t> coeff(m, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    EndElement combo;
    for (std::size_t v = 0; v < dims.size(); ++v) combo.emplace_back(algebra.rep.dim_at(v), algebra.rep.dim_at(v));
    for (std::size_t i = 0; i < m; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t v = 0; v < dims.size(); ++v) {
        detail::axpy(f, combo[v].entries(), algebra.basis[i][v].entries(), FieldElement(coeff[i]));
      }
    }
    if (!qn_test(f, combo, n)) return false;
    for (std::size_t i = m; i-- > 0;) {
      if (++coeff[i] < q) break;
      coeff[i] = 0;
    }
  }
  return true;
}

}  // namespace qrep

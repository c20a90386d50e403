#include <fmt/format.h>

#include "qrep/rep.hpp"

namespace qrep {

Representation reflect_functor(const Representation& rep, std::size_t v) {
  const auto& quiver = rep.quiver();
  const auto& f = rep.field();
  if (v >= quiver.vertex_count()) throw Error(Errc::UnknownVertex, fmt::format("vertex index {}", v));
  if (quiver.has_self_loop_at(v)) {
    throw Error(Errc::SelfLoopAtV, fmt::format("vertex '{}' carries a loop", quiver.vertices()[v]));
  }
  const bool sink = quiver.is_sink(v);
  if (!sink && !quiver.is_source(v)) {
    throw Error(Errc::NotSinkOrSource, fmt::format("vertex '{}' is neither a sink nor a source", quiver.vertices()[v]));
  }

  std::vector<std::size_t> incident;
  std::size_t stacked = 0;
  for (std::size_t e = 0; e < quiver.edge_count(); ++e) {
    const auto& edge = quiver.edges()[e];
    if (edge.tail == v || edge.head == v) {
      incident.push_back(e);
      stacked += rep.dim_at(sink ? edge.tail : edge.head);
    }
  }
  const std::size_t nv = rep.dim_at(v);

  std::vector<MatrixGF> maps = rep.maps();
  DimVector dims = rep.dims();

  if (sink) {
    // phi = [pi_e1 | pi_e2 | ...] : sum of U_w -> U_v; new U_v = ker phi
    MatrixGF phi(nv, stacked);
    std::size_t col = 0;
    for (auto e : incident) {
      const auto& pi = rep.map(e);
      for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < pi.cols(); ++j) phi(i, col + j) = pi(i, j);
      }
      col += pi.cols();
    }
    const auto kernel = kernel_basis(f, phi);
    const std::size_t d = kernel.size();
    std::size_t row = 0;
    for (auto e : incident) {
      const std::size_t nw = rep.map(e).cols();
      MatrixGF proj(nw, d);
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t i = 0; i < nw; ++i) proj(i, t) = kernel[t][row + i];
      }
      maps[e] = std::move(proj);
      row += nw;
    }
    dims[v] = static_cast<std::int64_t>(d);
  } else {
    // psi = [pi_e1; pi_e2; ...] : U_v -> sum of U_w; new U_v = coker psi,
    // realized by a basis of the left kernel of psi
    MatrixGF psi_t(nv, stacked);
    std::size_t col = 0;
    for (auto e : incident) {
      const auto& pi = rep.map(e);
      for (std::size_t i = 0; i < pi.rows(); ++i) {
        for (std::size_t j = 0; j < nv; ++j) psi_t(j, col + i) = pi(i, j);
      }
      col += pi.rows();
    }
    const auto cokernel = kernel_basis(f, psi_t);
    const std::size_t d = cokernel.size();
    std::size_t offset = 0;
    for (auto e : incident) {
      const std::size_t nw = rep.map(e).rows();
      MatrixGF quot(d, nw);
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t i = 0; i < nw; ++i) quot(t, i) = cokernel[t][offset + i];
      }
      maps[e] = std::move(quot);
      offset += nw;
    }
    dims[v] = static_cast<std::int64_t>(d);
  }
  return Representation(quiver.reflected_at(v), f, std::move(dims), std::move(maps));
}

}  // namespace qrep

#include "qrep/linalg.hpp"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

namespace qrep {

MatrixGF::MatrixGF(std::size_t rows, std::size_t cols, VectorGF entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(Errc::ShapeMismatch, fmt::format("{}x{} matrix given {} entries", rows, cols, data_.size()));
  }
}

MatrixGF MatrixGF::from_indices(std::size_t rows, std::size_t cols, std::initializer_list<std::uint32_t> entries) {
  VectorGF data;
  data.reserve(entries.size());
  for (auto e : entries) data.emplace_back(e);
  return MatrixGF(rows, cols, std::move(data));
}

MatrixGF MatrixGF::identity(std::size_t n) {
  MatrixGF m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldSpec::one();
  return m;
}

bool MatrixGF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement e) { return e.is_zero(); });
}

void MatrixGF::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

PolyGF PolyGF::from(VectorGF c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return PolyGF{std::move(c)};
}

PolyGF PolyGF::monomial(std::size_t degree) {
  VectorGF c(degree + 1);
  c[degree] = FieldSpec::one();
  return PolyGF{std::move(c)};
}

PolyGF poly_add(const FieldSpec& f, const PolyGF& a, const PolyGF& b) {
  VectorGF c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    FieldElement x = i < a.coeffs.size() ? a.coeffs[i] : FieldSpec::zero();
    FieldElement y = i < b.coeffs.size() ? b.coeffs[i] : FieldSpec::zero();
    c[i] = f.add(x, y);
  }
  return PolyGF::from(std::move(c));
}

PolyGF poly_sub(const FieldSpec& f, const PolyGF& a, const PolyGF& b) {
  PolyGF nb = b;
  for (auto& x : nb.coeffs) x = f.neg(x);
  return poly_add(f, a, nb);
}

PolyGF poly_mul(const FieldSpec& f, const PolyGF& a, const PolyGF& b) {
  if (a.is_zero() || b.is_zero()) return {};
  VectorGF c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
  }
  return PolyGF::from(std::move(c));
}

FieldElement poly_eval(const FieldSpec& f, const PolyGF& a, FieldElement x) {
  FieldElement acc = FieldSpec::zero();
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs[i]);
  return acc;
}

namespace detail {

void axpy(const FieldSpec& f, std::span<FieldElement> dst, std::span<const FieldElement> src, FieldElement factor,
          std::size_t from) {
  if (factor.is_zero()) return;
  const auto& t = f.tables();
  const std::size_t n = dst.size();
  if (t.p == 2 && factor == FieldSpec::one()) {
    // characteristic 2: addition is XOR of indices
    for (std::size_t j = from; j < n; ++j) dst[j] = FieldElement(dst[j].index() ^ src[j].index());
    return;
  }
  if (t.full_tables) {
    const std::uint16_t* mrow = t.mul.data() + static_cast<std::size_t>(factor.index()) * t.q;
    const std::uint16_t* add = t.add.data();
    const std::size_t q = t.q;
    for (std::size_t j = from; j < n; ++j) {
      dst[j] = FieldElement(add[dst[j].index() * q + mrow[src[j].index()]]);
    }
    return;
  }
  for (std::size_t j = from; j < n; ++j) dst[j] = f.add(dst[j], f.mul(factor, src[j]));
}

}  // namespace detail

namespace {

// In-place reduction to RREF. Row updates touch only the nonzero columns of
// the pivot row when it is sparse, which keeps structured systems cheap.
std::vector<std::size_t> reduce(const FieldSpec& f, MatrixGF& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);

    auto prow = m.row(r);
    const FieldElement scale_by = f.inv(prow[c]);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] = f.mul(prow[j], scale_by);
      support.push_back(j);
    }
    const bool sparse = support.size() * 4 < cols - c;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      FieldElement x = m(i, c);
      if (x.is_zero()) continue;
      const FieldElement factor = f.neg(x);
      auto dst = m.row(i);
      if (sparse) {
        for (std::size_t j : support) dst[j] = f.add(dst[j], f.mul(factor, prow[j]));
      } else {
        detail::axpy(f, dst, prow, factor, c);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const FieldSpec& f, MatrixGF m) {
  auto pivots = reduce(f, m);
  RrefResult out;
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  out.reduced = std::move(m);
  return out;
}

std::vector<VectorGF> kernel_basis(const FieldSpec& f, const MatrixGF& m) {
  MatrixGF r = m;
  const auto pivots = reduce(f, r);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<VectorGF> basis;
  basis.reserve(cols - pivots.size());
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    VectorGF v(cols);
    v[fc] = FieldSpec::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

SpanResult span_basis(const FieldSpec& f, const std::vector<VectorGF>& vectors) {
  SpanResult out;
  if (vectors.empty()) return out;
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error(Errc::LengthMismatch, fmt::format("vector of length {} among length {}", v.size(), n));
  }
  VectorGF data;
  data.reserve(vectors.size() * n);
  for (const auto& v : vectors) data.insert(data.end(), v.begin(), v.end());
  MatrixGF m(vectors.size(), n, std::move(data));
  const auto pivots = reduce(f, m);
  out.dim = pivots.size();
  for (std::size_t i = 0; i < out.dim; ++i) out.basis.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

PolyGF char_poly(const FieldSpec& f, const MatrixGF& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, fmt::format("char_poly of {}x{} matrix", m.rows(), m.cols()));
  const std::size_t n = m.rows();
  MatrixGF h = m;

  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;  // column already reduced
    if (piv != j + 1) {
      h.swap_rows(piv, j + 1);
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, j + 1));
    }
    const FieldElement pinv = f.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j).is_zero()) continue;
      const FieldElement factor = f.mul(h(r, j), pinv);
      detail::axpy(f, h.row(r), h.row(j + 1), f.neg(factor));
      for (std::size_t i = 0; i < n; ++i) h(i, j + 1) = f.add(h(i, j + 1), f.mul(factor, h(i, r)));
    }
  }

  // p_k = (lambda - h_kk) p_{k-1} - sum_i h_ik (prod of subdiagonal) p_{i-1}
  std::vector<PolyGF> p(n + 1);
  p[0] = PolyGF::monomial(0);
  for (std::size_t k = 1; k <= n; ++k) {
    PolyGF lin = PolyGF::from({f.neg(h(k - 1, k - 1)), FieldSpec::one()});
    PolyGF acc = poly_mul(f, lin, p[k - 1]);
    FieldElement prod = FieldSpec::one();
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, h(i, i - 1));
      if (prod.is_zero()) break;
      const FieldElement c = f.mul(h(i - 1, k - 1), prod);
      if (!c.is_zero()) acc = poly_sub(f, acc, poly_mul(f, PolyGF::from({c}), p[i - 1]));
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

bool is_nilpotent(const FieldSpec& f, const MatrixGF& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, fmt::format("is_nilpotent of {}x{} matrix", m.rows(), m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return true;
  MatrixGF power = m;
  std::size_t exponent = 1;
  while (exponent < n) {
    if (power.is_zero()) return true;
    power = multiply(f, power, power);
    exponent *= 2;
  }
  return power.is_zero();
}

MatrixGF multiply(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::ShapeMismatch, fmt::format("cannot multiply {}x{} by {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
  }
  MatrixGF c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto crow = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement x = a(i, k);
      if (!x.is_zero()) detail::axpy(f, crow, b.row(k), x);
    }
  }
  return c;
}

MatrixGF add(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "matrix sum of different shapes");
  MatrixGF c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] = f.add(a.entries()[i], b.entries()[i]);
  return c;
}

MatrixGF subtract(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "matrix difference of different shapes");
  MatrixGF c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] = f.sub(a.entries()[i], b.entries()[i]);
  return c;
}

MatrixGF scale(const FieldSpec& f, FieldElement s, const MatrixGF& a) {
  MatrixGF c = a;
  for (auto& e : c.entries()) e = f.mul(s, e);
  return c;
}

MatrixGF transpose(const MatrixGF& a) {
  MatrixGF t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

std::optional<MatrixGF> inverse(const FieldSpec& f, const MatrixGF& a) {
  if (!a.is_square()) throw Error(Errc::NotSquare, fmt::format("inverse of {}x{} matrix", a.rows(), a.cols()));
  const std::size_t n = a.rows();
  MatrixGF aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = FieldSpec::one();
  }
  const auto pivots = reduce(f, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  MatrixGF inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

MatrixGF commutator(const FieldSpec& f, const MatrixGF& a, const MatrixGF& b) {
  return subtract(f, multiply(f, a, b), multiply(f, b, a));
}

MatrixGF block_diagonal(std::span<const MatrixGF> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  MatrixGF out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::string format_matrix(const FieldSpec& f, const MatrixGF& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += f.format(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace qrep

#include <fmt/format.h>

#include "qrep/rep.hpp"

namespace qrep {

std::optional<Representation> find_abs_indec(const Quiver& quiver, const DimVector& dims, const FieldSpec& field,
                                             const std::map<std::size_t, FieldElement>& fixed, std::uint64_t cap) {
  if (dims.size() != quiver.vertex_count()) throw Error(Errc::VertexMismatch, "dimension vector length");
  if (!dims.is_nonnegative()) throw Error(Errc::NegativeCoordinate, "negative dimension");
  const std::size_t total = entry_count(quiver, dims);

  VectorGF entries(total);
  std::vector<std::size_t> free_slots;
  for (std::size_t i = 0; i < total; ++i) {
    auto it = fixed.find(i);
    if (it == fixed.end()) {
      free_slots.push_back(i);
    } else {
      if (!field.contains(it->second)) throw Error(Errc::MixedFields, fmt::format("fixed entry {} outside the field", i));
      entries[i] = it->second;
    }
  }
  for (const auto& [index, value] : fixed) {
    if (index >= total) throw Error(Errc::InvalidArgument, fmt::format("fixed entry {} beyond M = {}", index, total));
  }
  const std::uint64_t q = field.q();
  const std::uint64_t space = saturating_pow(q, free_slots.size());
  if (space > cap) {
    throw Error(Errc::TooLarge, fmt::format("{}^{} assignments exceed cap {}", q, free_slots.size(), cap));
  }

  // Odometer over the free entries, last one fastest: visits assignments in
  // lexicographic order, which is the depth-first order of the search tree.
  for (std::uint64_t step = 0; step < space; ++step) {
    auto rep = Representation::assemble(quiver, field, dims, entries);
    if (decide_abs_indec(rep).is_abs_indec()) return rep;
    for (std::size_t i = free_slots.size(); i-- > 0;) {
      auto& x = entries[free_slots[i]];
      if (x.index() + 1 < q) {
        x = FieldElement(x.index() + 1);
        break;
      }
      x = FieldElement(0);
    }
  }
  return std::nullopt;
}

}  // namespace qrep

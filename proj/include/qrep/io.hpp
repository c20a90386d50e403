#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qrep/rep.hpp"

namespace qrep {

// Text formats. Parse errors are Errc::Parse with "source:line: field: ..." messages.
//
// Quiver:
//   vertices: v1 v2
//   edge: v1 -> v2
//
// Representation (edges in quiver order, n_head rows of n_tail entries each):
//   field: GF(3^1) mod 0,1
//   dims: v1=1 v2=2
//   map 0:
//   1
//   0

Quiver parse_quiver(std::string_view text, std::string_view source = "<quiver>");
std::string format_quiver(const Quiver& quiver);

Representation parse_representation(std::string_view text, const Quiver& quiver,
                                    std::string_view source = "<representation>");
std::string format_representation(const Representation& rep);

/// "v1=2 v2=1"; every vertex exactly once.
DimVector parse_dims(std::string_view text, const Quiver& quiver);
std::string format_dims(const DimVector& dims, const Quiver& quiver);

std::string read_file(const std::filesystem::path& path);

}  // namespace qrep

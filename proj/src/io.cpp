#include "qrep/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace qrep {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool skippable(std::string_view line) {
  line = strip(line);
  return line.empty() || line.front() == '#';
}

[[noreturn]] void fail(std::string_view source, std::size_t line, std::string_view field, const std::string& msg) {
  throw Error(Errc::Parse, fmt::format("{}:{}: {}: {}", source, line, field, msg));
}

// "key: rest" -> rest, or nullopt if the key does not match
std::optional<std::string_view> keyed(std::string_view line, std::string_view key) {
  line = strip(line);
  if (line.substr(0, key.size()) != key) return std::nullopt;
  line.remove_prefix(key.size());
  line = strip(line);
  if (line.empty() || line.front() != ':') return std::nullopt;
  return strip(line.substr(1));
}

}  // namespace

Quiver parse_quiver(std::string_view text, std::string_view source) {
  const auto lines = split_lines(text);
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  bool have_vertices = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (skippable(lines[i])) continue;
    if (auto rest = keyed(lines[i], "vertices")) {
      if (have_vertices) fail(source, lineno, "vertices", "declared twice");
      for (auto tok : split_ws(*rest)) vertices.emplace_back(tok);
      have_vertices = true;
    } else if (auto rest = keyed(lines[i], "edge")) {
      if (!have_vertices) fail(source, lineno, "edge", "edge before the vertices line");
      auto arrow = rest->find("->");
      if (arrow == std::string_view::npos) fail(source, lineno, "edge", "expected 'tail -> head'");
      auto tail = strip(rest->substr(0, arrow)), head = strip(rest->substr(arrow + 2));
      if (tail.empty() || head.empty()) fail(source, lineno, "edge", "missing endpoint");
      for (auto v : {tail, head}) {
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) {
          fail(source, lineno, "edge", fmt::format("unknown vertex '{}'", v));
        }
      }
      edges.emplace_back(std::string(tail), std::string(head));
    } else {
      fail(source, lineno, "line", fmt::format("unrecognized line '{}'", strip(lines[i])));
    }
  }
  if (!have_vertices) fail(source, lines.size(), "vertices", "missing vertices line");
  try {
    return Quiver(std::move(vertices), edges);
  } catch (const Error& e) {
    fail(source, 1, "vertices", e.detail());
  }
}

std::string format_quiver(const Quiver& quiver) {
  std::string out = "vertices:";
  for (const auto& v : quiver.vertices()) out += " " + v;
  out += '\n';
  for (const auto& e : quiver.edges()) {
    out += fmt::format("edge: {} -> {}\n", quiver.vertices()[e.tail], quiver.vertices()[e.head]);
  }
  return out;
}

DimVector parse_dims(std::string_view text, const Quiver& quiver) {
  DimVector dims(std::vector<std::int64_t>(quiver.vertex_count(), 0));
  std::vector<bool> seen(quiver.vertex_count(), false);
  for (auto tok : split_ws(text)) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::Parse, fmt::format("dims: expected 'vertex=n', got '{}'", tok));
    auto name = tok.substr(0, eq), value = tok.substr(eq + 1);
    std::size_t v = 0;
    try {
      v = quiver.index_of(name);
    } catch (const Error&) {
      throw Error(Errc::Parse, fmt::format("dims: unknown vertex '{}'", name));
    }
    if (seen[v]) throw Error(Errc::Parse, fmt::format("dims: vertex '{}' given twice", name));
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
      throw Error(Errc::Parse, fmt::format("dims: bad value '{}' for '{}'", value, name));
    }
    if (n < 0) throw Error(Errc::Parse, fmt::format("dims: negative value for '{}'", name));
    dims[v] = n;
    seen[v] = true;
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw Error(Errc::Parse, fmt::format("dims: vertex '{}' missing", quiver.vertices()[v]));
  }
  return dims;
}

std::string format_dims(const DimVector& dims, const Quiver& quiver) {
  std::string out;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (v) out += ' ';
    out += fmt::format("{}={}", quiver.vertices()[v], dims[v]);
  }
  return out;
}

Representation parse_representation(std::string_view text, const Quiver& quiver, std::string_view source) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto next_content = [&]() -> std::optional<std::size_t> {
    while (i < lines.size() && skippable(lines[i])) ++i;
    if (i == lines.size()) return std::nullopt;
    return i++;
  };

  auto at = next_content();
  if (!at) fail(source, lines.size(), "field", "missing field line");
  auto field_text = keyed(lines[*at], "field");
  if (!field_text) fail(source, *at + 1, "field", "expected 'field: GF(p^k) mod ...'");
  std::optional<FieldSpec> field;
  try {
    field = FieldSpec::parse(*field_text);
  } catch (const Error& e) {
    fail(source, *at + 1, "field", e.detail());
  }

  at = next_content();
  if (!at) fail(source, lines.size(), "dims", "missing dims line");
  auto dims_text = keyed(lines[*at], "dims");
  if (!dims_text) fail(source, *at + 1, "dims", "expected 'dims: v=n ...'");
  DimVector dims;
  try {
    dims = parse_dims(*dims_text, quiver);
  } catch (const Error& e) {
    fail(source, *at + 1, "dims", e.detail());
  }

  std::vector<MatrixGF> maps;
  for (std::size_t e = 0; e < quiver.edge_count(); ++e) {
    const std::string label = fmt::format("map {}", e);
    at = next_content();
    if (!at) fail(source, lines.size(), label, "missing map block");
    auto header = strip(lines[*at]);
    if (header != label + ":") fail(source, *at + 1, label, fmt::format("expected '{}:', got '{}'", label, header));
    const auto& edge = quiver.edges()[e];
    const auto rows = static_cast<std::size_t>(dims[edge.head]), cols = static_cast<std::size_t>(dims[edge.tail]);
    MatrixGF m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r, ++i) {
      if (i >= lines.size()) fail(source, lines.size(), label, fmt::format("expected {} rows", rows));
      auto toks = split_ws(lines[i]);
      if (toks.size() != cols) {
        fail(source, i + 1, label, fmt::format("row {} has {} entries, expected {}", r, toks.size(), cols));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        try {
          m(r, c) = field->parse_element(toks[c]);
        } catch (const Error& err) {
          fail(source, i + 1, label, err.detail());
        }
      }
    }
    maps.push_back(std::move(m));
  }
  if (auto extra = next_content()) fail(source, *extra + 1, "line", "trailing content after the last map");
  return Representation(quiver, *field, std::move(dims), std::move(maps));
}

std::string format_representation(const Representation& rep) {
  const auto& f = rep.field();
  std::string out = fmt::format("field: {}\n", f.header());
  out += fmt::format("dims: {}\n", format_dims(rep.dims(), rep.quiver()));
  for (std::size_t e = 0; e < rep.maps().size(); ++e) {
    out += fmt::format("map {}:\n", e);
    out += format_matrix(f, rep.map(e));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, fmt::format("{}: cannot open file", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qrep

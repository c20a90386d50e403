// quivtool: command-line front end for qrep.
//
// Exit status: 0 when the command ran (whatever the verdict), 2 for parse or
// validation errors, 3 when a size cap is exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qrep/census.hpp"
#include "qrep/io.hpp"
#include "qrep/rep.hpp"
#include "qrep/roots.hpp"

namespace {

using nlohmann::json;
using namespace qrep;

struct CommandRequest {
  std::string quiver_path;
  std::string rep_path;
  std::string field;
  std::string alpha;
  std::string q_list = "2,3";
  std::string fixed;
  std::string vertex;
  std::string out_path;
  std::string out_quiver_path;
  std::string method = "stabilizer";
  std::uint64_t cap = kDefaultStateCap;
  std::uint64_t group_cap = kDefaultGroupCap;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100;
  std::int64_t height_bound = 4;
  unsigned jobs = 1;
  std::optional<std::int64_t> norm;
  std::optional<std::int64_t> multiplicity;
  std::string format = "text";
};

struct Report {
  std::string text;
  json data = json::object();
};

json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

json quiver_json(const Quiver& quiver) {
  json edges = json::array();
  for (const auto& e : quiver.edges()) edges.push_back({quiver.vertices()[e.tail], quiver.vertices()[e.head]});
  return {{"vertices", quiver.vertices()}, {"edges", edges}};
}

json dims_json(const DimVector& dims, const Quiver& quiver) {
  json out = json::object();
  for (std::size_t v = 0; v < dims.size(); ++v) out[quiver.vertices()[v]] = dims[v];
  return out;
}

std::string word_text(const std::vector<std::size_t>& word, const std::vector<std::string>& names) {
  std::string out;
  for (auto v : word) {
    if (!out.empty()) out += ' ';
    out += names[v];
  }
  return out;
}

Quiver load_quiver(const CommandRequest& req) {
  if (req.quiver_path.empty()) throw Error(Errc::Parse, "--quiver is required");
  return parse_quiver(read_file(req.quiver_path), req.quiver_path);
}

Representation load_rep(const CommandRequest& req, const Quiver& quiver) {
  if (req.rep_path.empty()) throw Error(Errc::Parse, "--rep is required");
  return parse_representation(read_file(req.rep_path), quiver, req.rep_path);
}

DimVector load_alpha(const CommandRequest& req, const Quiver& quiver) {
  if (req.alpha.empty()) throw Error(Errc::Parse, "--alpha is required");
  return parse_dims(req.alpha, quiver);
}

FieldSpec load_field(const CommandRequest& req) {
  if (req.field.empty()) throw Error(Errc::Parse, "--field is required");
  return FieldSpec::parse(req.field);
}

std::vector<std::uint32_t> parse_q_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      auto v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(Errc::Parse, fmt::format("--q-list: bad value '{}'", tok));
    }
  }
  if (out.empty()) throw Error(Errc::Parse, "--q-list is empty");
  return out;
}

std::map<std::size_t, FieldElement> parse_fixed(const std::string& text, const FieldSpec& field) {
  std::map<std::size_t, FieldElement> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(Errc::Parse, fmt::format("--fixed: expected 'idx=val', got '{}'", tok));
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(tok.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(Errc::Parse, fmt::format("--fixed: bad index in '{}'", tok));
    }
    out[idx] = field.parse_element(tok.substr(eq + 1));
  }
  return out;
}

void write_out(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, fmt::format("{}: cannot write file", path));
  out << content;
}

std::string reason_text(const IndecVerdict& v) {
  switch (v.reason) {
    case NegativeReason::None: return "";
    case NegativeReason::ZeroDimension: return "ZERO_DIMENSION";
    case NegativeReason::BasisElementNotQn: return fmt::format("BASIS_ELEMENT_NOT_QN({})", v.failing_index);
    case NegativeReason::LieNotNilpotent: {
      std::string s;
      for (auto d : v.series) s += (s.empty() ? "" : ",") + std::to_string(d);
      return fmt::format("LIE_NOT_NILPOTENT({})", s);
    }
  }
  return "";
}

void verdict_into(Report& r, const IndecVerdict& v, const FieldSpec& f) {
  const char* decision = v.is_abs_indec() ? "ABS_INDEC" : "NOT_ABS_INDEC";
  r.text += fmt::format("{}\n", decision);
  r.data["decision"] = decision;
  r.data["end_dim"] = v.end_dim;
  if (v.is_abs_indec()) {
    std::vector<std::string> eig;
    for (auto e : v.eig_values) eig.push_back(f.format(e));
    r.text += fmt::format("eig: [{}]\n", fmt::join(eig, ", "));
    r.data["eig"] = eig;
    r.data["reason"] = nullptr;
  } else {
    r.text += fmt::format("reason: {}\n", reason_text(v));
    r.data["reason"] = reason_text(v);
  }
  r.text += fmt::format("end_dim: {}\n", v.end_dim);
  r.data["series"] = v.series;
}

Report cmd_decide(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto rep = load_rep(req, quiver);
  Report r;
  verdict_into(r, decide_abs_indec(rep), rep.field());
  return r;
}

Report cmd_endo(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto rep = load_rep(req, quiver);
  const auto& f = rep.field();
  auto algebra = end_basis(rep);
  Report r;
  r.text += fmt::format("m: {}\n", algebra.m());
  r.data["m"] = algebra.m();
  json basis = json::array();
  for (std::size_t i = 0; i < algebra.m(); ++i) {
    r.text += fmt::format("basis {}:\n", i);
    json blocks = json::object();
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) {
      const auto& block = algebra.basis[i][v];
      r.text += fmt::format("  {}:\n", quiver.vertices()[v]);
      json rows = json::array();
      for (std::size_t a = 0; a < block.rows(); ++a) {
        std::vector<std::string> row;
        for (std::size_t b = 0; b < block.cols(); ++b) row.push_back(f.format(block(a, b)));
        r.text += fmt::format("    {}\n", fmt::join(row, " "));
        rows.push_back(row);
      }
      blocks[quiver.vertices()[v]] = rows;
    }
    basis.push_back(blocks);
  }
  r.data["basis"] = basis;
  return r;
}

Report cmd_classify(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto alpha = load_alpha(req, quiver);
  auto c = cartan(quiver);
  auto rc = classify(c, alpha);
  Report r;
  const auto name = std::string(root_verdict_name(rc.verdict));
  r.text += fmt::format("{}, (α|α) = {}\n", name, rc.norm);
  const auto word_str = word_text(rc.word, quiver.vertices());
  r.text += word_str.empty() ? "word:\n" : fmt::format("word: {}\n", word_str);
  r.text += fmt::format("core: {}\n", format_dims(rc.core, quiver));
  std::vector<std::string> word;
  for (auto v : rc.word) word.push_back(quiver.vertices()[v]);
  r.data = {{"verdict", name}, {"norm", rc.norm}, {"word", word}, {"core", dims_json(rc.core, quiver)},
            {"alpha", dims_json(alpha, quiver)}};
  return r;
}

Report cmd_real_roots(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto roots = real_roots_up_to(cartan(quiver), req.height_bound);
  Report r;
  json list = json::array();
  for (const auto& a : roots) {
    r.text += format_dims(a, quiver) + "\n";
    list.push_back(dims_json(a, quiver));
  }
  r.data = {{"height_bound", req.height_bound}, {"roots", list}};
  return r;
}

BigInt count_with(const CommandRequest& req, const Quiver& quiver, const DimVector& alpha, const FieldSpec& f) {
  if (req.method == "stabilizer") return count_classes_stabilizer(quiver, alpha, f, req.cap, req.jobs);
  if (req.method == "canonical") return count_classes_canonical(quiver, alpha, f, req.cap, req.group_cap);
  if (req.method == "both") {
    auto a = count_classes_stabilizer(quiver, alpha, f, req.cap, req.jobs);
    auto b = count_classes_canonical(quiver, alpha, f, req.cap, req.group_cap);
    if (a != b) throw Error(Errc::NonIntegerResult, fmt::format("methods disagree: {} vs {}", a.str(), b.str()));
    return a;
  }
  throw Error(Errc::Parse, fmt::format("--method: unknown '{}'", req.method));
}

Report cmd_count(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto alpha = load_alpha(req, quiver);
  auto f = load_field(req);
  auto count = count_with(req, quiver, alpha, f);
  Report r;
  r.text += fmt::format("{}\t{}\n", f.q(), count.str());
  r.data = {{"quiver", quiver_json(quiver)},
            {"alpha", dims_json(alpha, quiver)},
            {"rows", json::array({{{"q", f.q()}, {"count", big_to_json(count)}}})},
            {"method", req.method}};
  return r;
}

Report cmd_kacpoly(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto alpha = load_alpha(req, quiver);
  std::int64_t norm = req.norm ? *req.norm : bilinear(cartan(quiver), alpha, alpha).twice / 2;
  KacCountTable table{quiver, alpha, {}};
  Report r;
  json rows = json::array();
  for (auto q : parse_q_list(req.q_list)) {
    auto f = FieldSpec::parse(fmt::format("GF({})", q));
    auto count = count_with(req, quiver, alpha, f);
    r.text += fmt::format("{}\t{}\n", q, count.str());
    rows.push_back({{"q", q}, {"count", big_to_json(count)}});
    table.rows.emplace_back(q, std::move(count));
  }
  std::optional<BigInt> mult;
  if (req.multiplicity) mult = BigInt(*req.multiplicity);
  auto interp = interpolate_kac(table, norm, mult);
  const auto& d = interp.diagnostics;
  r.text += fmt::format("polynomial: {}\n", interp.polynomial.to_string());
  r.text += fmt::format("integer_coefficients: {}\n", d.integer_coefficients);
  r.text += fmt::format("monic: {}\n", d.monic);
  r.text += fmt::format("degree: {} (expected 1 - ({}) = {}): {}\n", interp.polynomial.degree(), norm,
                        d.expected_degree, d.degree_matches);
  r.text += fmt::format("nonnegative: {}\n", d.nonnegative);
  r.text += fmt::format("constant_term: {}\n", d.constant_term.str());
  if (d.constant_matches_multiplicity) {
    r.text += fmt::format("constant_matches_multiplicity: {}\n", *d.constant_matches_multiplicity);
  }
  json coeffs = json::array();
  for (const auto& c : interp.polynomial.coeffs) coeffs.push_back(big_to_json(c));
  json diag = {{"integer_coefficients", d.integer_coefficients},
               {"monic", d.monic},
               {"expected_degree", d.expected_degree},
               {"degree_matches", d.degree_matches},
               {"nonnegative", d.nonnegative},
               {"constant_term", big_to_json(d.constant_term)},
               {"all_pass", d.all_pass()}};
  if (d.constant_matches_multiplicity) diag["constant_matches_multiplicity"] = *d.constant_matches_multiplicity;
  r.data = {{"quiver", quiver_json(quiver)},
            {"alpha", dims_json(alpha, quiver)},
            {"rows", rows},
            {"polynomial", {{"text", interp.polynomial.to_string()}, {"coefficients", coeffs}}},
            {"diagnostics", diag}};
  return r;
}

Report cmd_sweep(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto alpha = load_alpha(req, quiver);
  auto f = load_field(req);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : quiver.edges()) edges.emplace_back(e.tail, e.head);
  auto results = orientation_sweep(quiver.vertices(), edges, alpha, f, req.cap, req.jobs);
  Report r;
  json list = json::array();
  bool agree = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::vector<std::string> arrows;
    for (const auto& e : results[i].quiver.edges()) {
      arrows.push_back(fmt::format("{}->{}", quiver.vertices()[e.tail], quiver.vertices()[e.head]));
    }
    r.text += fmt::format("{}\t{}\n", fmt::join(arrows, " "), results[i].count.str());
    list.push_back({{"edges", arrows}, {"count", big_to_json(results[i].count)}});
    agree = agree && results[i].count == results.front().count;
  }
  r.text += fmt::format("independent: {}\n", agree);
  r.data = {{"alpha", dims_json(alpha, quiver)}, {"q", f.q()}, {"orientations", list}, {"independent", agree}};
  return r;
}

Report cmd_reflect(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto rep = load_rep(req, quiver);
  if (req.vertex.empty()) throw Error(Errc::Parse, "--vertex is required");
  auto out = reflect_functor(rep, quiver.index_of(req.vertex));
  Report r;
  const auto quiver_text = format_quiver(out.quiver());
  const auto rep_text = format_representation(out);
  if (!req.out_quiver_path.empty()) write_out(req.out_quiver_path, quiver_text);
  if (!req.out_path.empty()) write_out(req.out_path, rep_text);
  r.text = quiver_text + rep_text;
  r.data = {{"quiver", quiver_json(out.quiver())}, {"dims", dims_json(out.dims(), out.quiver())},
            {"representation", rep_text}};
  return r;
}

Report rep_report(const CommandRequest& req, const Representation& rep) {
  const auto text = format_representation(rep);
  if (!req.out_path.empty()) write_out(req.out_path, text);
  Report r;
  r.text = text;
  r.data = {{"found", true}, {"representation", text}, {"dims", dims_json(rep.dims(), rep.quiver())}};
  return r;
}

Report cmd_find(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto alpha = load_alpha(req, quiver);
  auto f = load_field(req);
  auto found = find_abs_indec(quiver, alpha, f, parse_fixed(req.fixed, f), req.cap);
  if (!found) {
    Report r;
    r.text = "NONE\n";
    r.data = {{"found", false}};
    return r;
  }
  return rep_report(req, *found);
}

Report cmd_random(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto alpha = load_alpha(req, quiver);
  auto f = load_field(req);
  return rep_report(req, random_rep(quiver, alpha, f, req.seed));
}

Report cmd_oracle(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto rep = load_rep(req, quiver);
  Report r;
  const auto verdict = decide_abs_indec(rep);
  verdict_into(r, verdict, rep.field());
  bool oracle = false;
  if (rep.total_dim() > 0) oracle = all_elements_qn_oracle(end_basis(rep), req.cap);
  const bool agree = oracle == verdict.is_abs_indec();
  r.text += fmt::format("oracle: {}\nagree: {}\n", oracle ? "ALL_QUASI_NILPOTENT" : "NOT_ALL_QUASI_NILPOTENT", agree);
  r.data["oracle"] = oracle;
  r.data["agree"] = agree;
  return r;
}

Report cmd_schur(const CommandRequest& req) {
  auto quiver = load_quiver(req);
  auto alpha = load_alpha(req, quiver);
  auto f = load_field(req);
  auto probe = schur_probe(quiver, alpha, f, req.samples, req.seed);
  Report r;
  r.text = fmt::format("min_end_dim: {}\nabs_indec: {}/{}\nschur_certified: {}\n", probe.min_end_dim,
                       probe.indec_count, probe.samples, probe.min_end_dim == 1);
  r.data = {{"min_end_dim", probe.min_end_dim},
            {"abs_indec", probe.indec_count},
            {"samples", probe.samples},
            {"schur_certified", probe.min_end_dim == 1}};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Absolute indecomposability and Kac polynomial toolkit for quiver representations"};
  app.require_subcommand(1);
  CommandRequest req;

  auto add_common = [&](CLI::App* sub) { sub->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"})); };
  auto add_quiver = [&](CLI::App* sub) { sub->add_option("--quiver", req.quiver_path, "quiver file")->required(); };
  auto add_rep = [&](CLI::App* sub) { sub->add_option("--rep", req.rep_path, "representation file")->required(); };
  auto add_alpha = [&](CLI::App* sub) { sub->add_option("--alpha", req.alpha, "dimension vector 'v1=.. v2=..'")->required(); };
  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", req.field, "GF(p^k)[:c0,...,ck]")->required(); };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", req.cap, "enumeration cap"); };
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", req.jobs, "worker threads")->check(CLI::PositiveNumber); };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", req.method, "stabilizer, canonical or both")
        ->check(CLI::IsMember({"stabilizer", "canonical", "both"}));
    sub->add_option("--group-cap", req.group_cap, "cap on |G| for the canonical method");
  };

  std::map<CLI::App*, Report (*)(const CommandRequest&)> handlers;
  auto sub = [&](const char* name, const char* help, Report (*fn)(const CommandRequest&)) {
    auto* s = app.add_subcommand(name, help);
    add_common(s);
    handlers[s] = fn;
    return s;
  };

  auto* decide = sub("decide", "decide absolute indecomposability", cmd_decide);
  add_quiver(decide);
  add_rep(decide);

  auto* endo = sub("endo", "print a basis of End", cmd_endo);
  add_quiver(endo);
  add_rep(endo);

  auto* classify_cmd = sub("classify-root", "classify a dimension vector", cmd_classify);
  add_quiver(classify_cmd);
  add_alpha(classify_cmd);

  auto* roots = sub("real-roots", "list real positive roots up to a height", cmd_real_roots);
  add_quiver(roots);
  roots->add_option("--height-bound", req.height_bound, "maximum coordinate sum")->check(CLI::PositiveNumber);

  auto* count = sub("count", "count classes of absolutely indecomposable representations", cmd_count);
  add_quiver(count);
  add_alpha(count);
  add_field(count);
  add_cap(count);
  add_jobs(count);
  add_method(count);

  auto* kac = sub("kacpoly", "count at several q and interpolate", cmd_kacpoly);
  add_quiver(kac);
  add_alpha(kac);
  kac->add_option("--q-list", req.q_list, "comma-separated field orders");
  kac->add_option("--norm", req.norm, "override (alpha|alpha), needed for quivers with loops");
  kac->add_option("--multiplicity", req.multiplicity, "expected constant term");
  add_cap(kac);
  add_jobs(kac);
  add_method(kac);

  auto* sweep = sub("sweep-orientations", "count classes for every orientation", cmd_sweep);
  add_quiver(sweep);
  add_alpha(sweep);
  add_field(sweep);
  add_cap(sweep);
  add_jobs(sweep);

  auto* reflect = sub("reflect", "apply the reflection functor at a sink or source", cmd_reflect);
  add_quiver(reflect);
  add_rep(reflect);
  reflect->add_option("--vertex", req.vertex, "sink or source vertex")->required();
  reflect->add_option("--out", req.out_path, "write the reflected representation");
  reflect->add_option("--out-quiver", req.out_quiver_path, "write the reflected quiver");

  auto* find = sub("find", "search for an absolutely indecomposable representation", cmd_find);
  add_quiver(find);
  add_alpha(find);
  add_field(find);
  add_cap(find);
  find->add_option("--fixed", req.fixed, "partial assignment 'idx=val,...'");
  find->add_option("--out", req.out_path, "write the representation found");

  auto* random = sub("random", "draw a seeded random representation", cmd_random);
  add_quiver(random);
  add_alpha(random);
  add_field(random);
  random->add_option("--seed", req.seed, "generator seed");
  random->add_option("--out", req.out_path, "write the representation");

  auto* oracle = sub("oracle-check", "compare the decision with brute-force enumeration of End", cmd_oracle);
  add_quiver(oracle);
  add_rep(oracle);
  add_cap(oracle);

  auto* schur = sub("schur-probe", "sample End dimensions of random representations", cmd_schur);
  add_quiver(schur);
  add_alpha(schur);
  add_field(schur);
  schur->add_option("--samples", req.samples, "number of samples")->check(CLI::PositiveNumber);
  schur->add_option("--seed", req.seed, "first seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (auto* s : app.get_subcommands()) {
      Report report = handlers.at(s)(req);
      if (req.format == "json") {
        std::cout << report.data.dump(2) << "\n";
      } else {
        std::cout << report.text;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::TooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

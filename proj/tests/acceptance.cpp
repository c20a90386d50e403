// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "qrep/census.hpp"
#include "qrep/rep.hpp"
#include "qrep/roots.hpp"

using namespace qrep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// Every stabilizer-sum call made for criteria 1-4 and 10 goes through here.
struct IntegralityLedger {
  int calls = 0;
  std::vector<std::string> failures;
} integrality;

BigInt counted(const Quiver& quiver, const DimVector& dims, const FieldSpec& f) {
  ++integrality.calls;
  try {
    return count_classes_stabilizer(quiver, dims, f);
  } catch (const Error& e) {
    if (e.code() == Errc::NonIntegerResult) integrality.failures.push_back(e.what());
    throw;
  }
}

FieldSpec gf(std::uint32_t q) { return FieldSpec::parse(fmt::format("GF({})", q)); }

std::vector<DimVector> dims_up_to_two(std::size_t vertices) {
  std::vector<DimVector> out;
  DimVector d(std::vector<std::int64_t>(vertices, 0));
  while (true) {
    std::size_t i = 0;
    while (i < vertices && d[i] == 2) d[i++] = 0;
    if (i == vertices) break;
    ++d[i];
    out.push_back(d);
  }
  return out;
}

std::string dims_text(const DimVector& d) {
  std::vector<std::string> parts;
  for (auto x : d.n) parts.push_back(std::to_string(x));
  return "(" + fmt::format("{}", fmt::join(parts, ",")) + ")";
}

Outcome criterion_1() {
  Outcome o;
  for (std::uint32_t q : {2u, 3u}) {
    auto c = counted(linear_quiver(2), {1, 1}, gf(q));
    o.check(c == 1, fmt::format("q={} gave {}", q, c.str()));
  }
  return o;
}

Outcome criterion_2() {
  Outcome o;
  KacCountTable t{generalized_kronecker(2), {1, 1}, {}};
  const int expected[] = {3, 4, 5, 6};
  int i = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto c = counted(t.quiver, t.alpha, gf(q));
    o.check(c == expected[i++], fmt::format("q={} gave {}", q, c.str()));
    t.rows.emplace_back(q, c);
  }
  const auto norm = bilinear(cartan(t.quiver), t.alpha, t.alpha);
  o.check(norm.twice == 0, "(delta|delta) != 0");
  auto interp = interpolate_kac(t, norm.twice / 2);
  o.check(interp.polynomial.to_string() == "q + 1", "polynomial " + interp.polynomial.to_string());
  o.check(interp.diagnostics.monic, "not monic");
  o.check(interp.polynomial.degree() == 1 && interp.diagnostics.degree_matches, "degree");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  KacCountTable t{generalized_kronecker(3), {1, 1}, {}};
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto c = counted(t.quiver, t.alpha, gf(q));
    o.check(c == (q * q * q - 1) / (q - 1), fmt::format("q={} gave {}", q, c.str()));
    t.rows.emplace_back(q, c);
  }
  const auto norm = bilinear(cartan(t.quiver), t.alpha, t.alpha);
  o.check(norm.twice == -2, "(alpha|alpha) != -1");
  auto interp = interpolate_kac(t, norm.twice / 2, BigInt(1));
  const auto& d = interp.diagnostics;
  o.check(interp.polynomial.to_string() == "q^2 + q + 1", "polynomial " + interp.polynomial.to_string());
  o.check(interp.polynomial.degree() == 2 && d.expected_degree == 2 && d.degree_matches, "degree");
  o.check(d.monic && d.integer_coefficients, "not a monic integer polynomial");
  o.check(d.nonnegative, "negative coefficient");
  o.check(d.constant_term == 1 && d.constant_matches_multiplicity.value_or(false), "constant term");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  auto sweep = [&](const std::vector<std::string>& vs, const std::vector<std::pair<std::size_t, std::size_t>>& es,
                   const DimVector& alpha, const char* name) {
    ++integrality.calls;
    auto results = orientation_sweep(vs, es, alpha, gf(2));
    o.check(results.size() == (1u << es.size()), fmt::format("{}: {} orientations", name, results.size()));
    for (const auto& r : results) {
      o.check(r.count == results.front().count, fmt::format("{}: counts differ", name));
    }
    return results.front().count;
  };
  auto a3 = sweep({"v1", "v2", "v3"}, {{0, 1}, {1, 2}}, {1, 1, 1}, "A3");
  o.check(a3 == 1, "A3 count " + a3.str());
  auto k = sweep({"v1", "v2"}, {{0, 1}, {0, 1}}, {1, 1}, "Kronecker");
  o.check(k == 3, "Kronecker count " + k.str());
  return o;
}

struct OracleRun {
  int instances = 0;
  int disagreements = 0;
  int yes_instances = 0;
  int eig_pairs = 0;
  int eig_failures = 0;
};

OracleRun run_oracle_sweep() {
  OracleRun run;
  const auto f = gf(2);
  const std::vector<Quiver> quivers = {linear_quiver(2), generalized_kronecker(2), generalized_kronecker(3), jordan_quiver()};
  for (const auto& quiver : quivers) {
    for (const auto& dims : dims_up_to_two(quiver.vertex_count())) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto rep = random_rep(quiver, dims, f, 1000 * seed + static_cast<std::uint64_t>(dims.total()));
        auto verdict = decide_abs_indec(rep);
        auto algebra = end_basis(rep);
        ++run.instances;
        if (verdict.is_abs_indec() != all_elements_qn_oracle(algebra, kDefaultStateCap)) ++run.disagreements;
        if (!verdict.is_abs_indec()) continue;
        ++run.yes_instances;
        const auto n = rep.total_dim();
        for (std::size_t i = 0; i < algebra.m(); ++i) {
          for (std::size_t j = 0; j < algebra.m(); ++j) {
            EndElement sum;
            for (std::size_t v = 0; v < algebra.basis[i].size(); ++v) {
              sum.push_back(add(f, algebra.basis[i][v], algebra.basis[j][v]));
            }
            auto gi = qn_test(f, algebra.basis[i], n), gj = qn_test(f, algebra.basis[j], n), gs = qn_test(f, sum, n);
            ++run.eig_pairs;
            if (!gi || !gj || !gs || *gs != f.add(*gi, *gj)) ++run.eig_failures;
          }
        }
      }
    }
  }
  return run;
}

OracleRun oracle_run;

Outcome criterion_5() {
  Outcome o;
  oracle_run = run_oracle_sweep();
  o.check(oracle_run.instances >= 200, fmt::format("only {} instances", oracle_run.instances));
  o.check(oracle_run.disagreements == 0, fmt::format("{} disagreements", oracle_run.disagreements));
  o.detail = o.ok ? fmt::format("{} instances, {} YES", oracle_run.instances, oracle_run.yes_instances) : o.detail;
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto f = gf(2);
  int roots = 0, non_roots = 0;
  for (const auto& quiver : {linear_quiver(2), generalized_kronecker(2), generalized_kronecker(3)}) {
    const auto c = cartan(quiver);
    for (const auto& alpha : dims_up_to_two(2)) {
      const auto verdict = classify(c, alpha).verdict;
      auto found = find_abs_indec(quiver, alpha, f, {}, kDefaultStateCap);
      if (verdict == RootVerdict::NotPositiveRoot) {
        ++non_roots;
        o.check(!found.has_value(), fmt::format("{} edges {}: found a rep for a non-root", quiver.edge_count(), dims_text(alpha)));
      } else {
        ++roots;
        o.check(found.has_value() && decide_abs_indec(*found).is_abs_indec(),
                fmt::format("{} edges {}: no confirmed rep", quiver.edge_count(), dims_text(alpha)));
      }
    }
  }
  if (o.ok) o.detail = fmt::format("{} roots found, {} non-roots exhausted", roots, non_roots);
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::mt19937_64 rng(7);
  const std::vector<Quiver> quivers = {linear_quiver(2), generalized_kronecker(2), generalized_kronecker(3), linear_quiver(3)};
  const FieldSpec fields[] = {gf(2), gf(3), gf(4)};
  int negatives = 0;
  for (int pair = 0; pair < 100; ++pair) {
    const auto& quiver = quivers[rng() % quivers.size()];
    const auto& f = fields[rng() % 3];
    auto pick = [&] {
      DimVector d(std::vector<std::int64_t>(quiver.vertex_count()));
      while (d.is_zero()) {
        for (auto& x : d.n) x = static_cast<std::int64_t>(rng() % 3);
      }
      return d;
    };
    auto a = random_rep(quiver, pick(), f, rng());
    auto b = random_rep(quiver, pick(), f, rng());
    negatives += !decide_abs_indec(direct_sum(a, b)).is_abs_indec();
  }
  o.check(negatives == 100, fmt::format("{} of 100 sums decided NOT", negatives));
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const auto quiver = generalized_kronecker(2);
  const DimVector alpha{1, 1};
  const auto f = gf(2);
  std::vector<Representation> classes;
  auto reps = enumerate_reps(quiver, alpha, f);
  while (auto rep = reps.next()) {
    if (decide_abs_indec(*rep).is_abs_indec()) classes.push_back(*rep);
  }
  // GL_1(F_2) is trivial, so each representation is its own class
  o.check(classes.size() == 3, fmt::format("{} classes", classes.size()));
  o.check(count_classes_canonical(quiver, alpha, f) == 3, "canonical count differs");
  const auto sink = quiver.index_of("v2");
  const auto expected = reflect_simple(cartan(quiver), sink, alpha);
  o.check(expected == alpha, "r_v(alpha) != (1,1)");
  for (const auto& rep : classes) {
    auto r = reflect_functor(rep, sink);
    o.check(r.dims() == expected, "reflected dims " + dims_text(r.dims()));
    o.check(decide_abs_indec(r).is_abs_indec(), "reflected rep not absolutely indecomposable");
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  o.check(oracle_run.yes_instances > 0, "no YES instances");
  o.check(oracle_run.eig_failures == 0, fmt::format("{} of {} pairs fail", oracle_run.eig_failures, oracle_run.eig_pairs));
  if (o.ok) o.detail = fmt::format("{} pairs over {} YES instances", oracle_run.eig_pairs, oracle_run.yes_instances);
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const auto f = gf(2);
  auto j0 = Representation(jordan_quiver(), f, {2}, {MatrixGF::from_indices(2, 2, {0, 1, 0, 0})});
  auto diag = Representation(jordan_quiver(), f, {2}, {MatrixGF::from_indices(2, 2, {0, 0, 0, 1})});
  o.check(decide_abs_indec(j0).is_abs_indec(), "J(0) not ABS_INDEC");
  o.check(!decide_abs_indec(diag).is_abs_indec(), "diag(0,1) ABS_INDEC");
  auto c = counted(jordan_quiver(), {2}, f);
  o.check(c == 2, "count " + c.str());
  return o;
}

double time_decide(const DimVector& dims, int repeats) {
  const auto rep = random_rep(linear_quiver(2), dims, gf(2), 2024);
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto start = Clock::now();
    auto v = decide_abs_indec(rep);
    best = std::min(best, seconds_since(start));
    (void)v;
  }
  return best;
}

Outcome criterion_11() {
  Outcome o;
  const double t120 = time_decide({60, 60}, 1);
  const double t30 = time_decide({15, 15}, 5);
  const double t60 = time_decide({30, 30}, 5);
  const double ratio = t60 / t30;
  o.check(t120 < 10.0, fmt::format("N=120 took {:.3f} s", t120));
  o.check(ratio < 40.0, fmt::format("N 30->60 ratio {:.1f}", ratio));
  o.detail = fmt::format("N=120 {:.3f} s, N=30 {:.4f} s, N=60 {:.4f} s, ratio {:.1f}", t120, t30, t60, ratio) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion_12() {
  Outcome o;
  o.check(integrality.calls > 0, "no stabilizer calls recorded");
  for (const auto& f : integrality.failures) o.check(false, f);
  if (o.ok) o.detail = fmt::format("{} counting runs, all integral", integrality.calls);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit;  // seconds; 0 when not timed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "real-root counts on A2", 1.0, criterion_1},
      {2, "Kronecker delta counts and q + 1", 5.0, criterion_2},
      {3, "Gamma3 (1,1) counts and q^2 + q + 1", 10.0, criterion_3},
      {4, "orientation independence", 5.0, criterion_4},
      {5, "decision agrees with brute-force End enumeration", 60.0, criterion_5},
      {6, "existence on roots, absence on non-roots", 120.0, criterion_6},
      {7, "direct sums are not absolutely indecomposable", 30.0, criterion_7},
      {8, "reflection at the Kronecker sink", 5.0, criterion_8},
      {9, "eig additivity on YES instances", 0.0, criterion_9},
      {10, "Jordan quiver with a self-loop", 1.0, criterion_10},
      {11, "polynomial scaling of the decision", 0.0, criterion_11},
      {12, "stabilizer sums are integers", 0.0, criterion_12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    if (c.limit > 0 && elapsed >= c.limit) o.check(false, fmt::format("exceeded {:.0f} s", c.limit));
    failures += !o.ok;
    std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, elapsed,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gen.hpp"
#include "helpers.hpp"
#include "ncpbw/cli.hpp"
#include "oracle.hpp"

using namespace ncpbw;
using th::P;
using th::T;

namespace {

constexpr std::size_t kIdentityCases = 500;
constexpr double kIdentitySeconds = 10.0;
constexpr std::size_t kRandomIdeals = 50;
constexpr std::size_t kOracleDegree = 6;
constexpr std::size_t kOracleMaxSpan = 12;
constexpr double kOracleSeconds = 60.0;

const std::vector<std::string> kFixtures{"weyl.alg", "sl2.alg",     "x2y.alg",
                                         "x3y.alg",  "path_ab.alg", "quantum_plane.alg"};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

JobSpec load(const std::string& name) {
  std::ifstream in(std::string(NCPBW_FIXTURES) + "/" + name);
  if (!in) throw Error("cannot open fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

IdealPresentation ideal(const Quiver::Ptr& q, std::vector<std::string_view> rels) {
  std::vector<NcPoly> F;
  for (auto r : rels) F.push_back(P(q, r));
  return IdealPresentation(q, F);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

TruncatedGB complete_to(const IdealPresentation& F, const OrderSpec& ord, std::size_t bound) {
  CompletionOptions opt;
  opt.degree_bound = bound;
  return complete(F, ord, opt);
}

bool homogeneous_t(const NcPoly& F, std::size_t p) {
  for (const auto& [m, c] : F.terms())
    if (m.degree() != p) return false;
  return true;
}

Outcome homogenization_identities() {
  Outcome out;
  gen::Rng rng(20240601);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < kIdentityCases && out.pass; ++i) {
    auto q = gen::free_algebra(rng, 3);
    const NcPoly f = gen::poly(rng, q, 6), g = gen::poly(rng, q, 6);
    const NcPoly F = gen::poly_t(rng, q, 6, 3), G = gen::poly_t(rng, q, 6, 3);
    const std::string at = " (case " + std::to_string(i) + ")";
    out.require(dehomogenize(F + G) == dehomogenize(F) + dehomogenize(G), "sum dehomogenization" + at);
    out.require(dehomogenize(F * G) == dehomogenize(F) * dehomogenize(G), "product dehomogenization" + at);
    out.require(homogenize(f * g) == homogenize(f) * homogenize(g), "product homogenization" + at);
    const NcPoly sum = f + g;
    if (!sum.is_zero()) {
      const std::size_t r = degree(g), h = degree(f), s = r + h - degree(sum);
      out.require(T(q, s) * homogenize(sum) == T(q, r) * homogenize(f) + T(q, h) * homogenize(g),
                  "sum homogenization" + at);
    }
    out.require(dehomogenize(homogenize(f)) == f, "dehomogenize after homogenize" + at);
    const std::size_t p = gen::uniform(rng, 0, 6);
    const NcPoly H = gen::homogeneous_t(rng, q, p);
    if (!H.is_zero() && homogeneous_t(H, p) && !dehomogenize(H).is_zero()) {
      const NcPoly back = homogenize(dehomogenize(H));
      out.require(T(q, p - degree(back)) * back == H, "homogenize after dehomogenize" + at);
    }
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < kIdentitySeconds, "runtime " + std::to_string(elapsed) + " s");
  if (out.pass)
    out.detail = std::to_string(kIdentityCases) + " cases, " + std::to_string(out.checks) + " identities in " +
                 std::to_string(elapsed) + " s";
  return out;
}

Outcome weyl_end_to_end() {
  Outcome out;
  auto q = th::free_xy();
  auto rep = pbw_check(ideal(q, {"x*y - y*x - 1"}), OrderSpec(q), 8);
  out.require(rep.verdict == PbwVerdict::holds, "verdict " + std::string(to_string(rep.verdict)));
  out.require(rep.assoc_graded.relations == std::vector<NcPoly>{P(q, "x*y - y*x")}, "assoc-graded relations");
  out.require(rep.rees.relations == std::vector<NcPoly>{P(q, "x*y - y*x") - T(q, 2)}, "rees relations");
  std::vector<std::uint64_t> expect;
  for (std::uint64_t d = 0; d <= 8; ++d) expect.push_back(d + 1);
  out.require(rep.hilbert == expect, "hilbert function");
  out.require(oracle::graded_dimensions(*q, {P(q, "x*y - y*x - 1")}, 8, 2) == expect, "oracle hilbert function");
  return out;
}

Outcome sl2_end_to_end() {
  Outcome out;
  const JobSpec job = load("sl2.alg");
  const OrderSpec ord = job.order();
  const IdealPresentation F = job.ideal();
  auto G = complete_to(F, ord, 6);
  out.require(G.is_complete(), "completion truncated");
  auto inputs = F.generators;
  sort_basis(inputs, ord);
  out.require(G.elements == inputs, "relations do not complete to themselves");
  const std::vector<std::uint64_t> expect{1, 3, 6, 10, 15, 21};
  out.require(hilbert_function(G, 5) == expect, "hilbert function");
  out.require(oracle::graded_dimensions(*job.algebra, F.generators, 5, 2) == expect, "oracle hilbert function");
  auto rep = pbw_check(F, ord, 6);
  out.require(rep.verdict == PbwVerdict::holds, "verdict " + std::string(to_string(rep.verdict)));
  return out;
}

Outcome negative_witness() {
  Outcome out;
  auto q = th::free_xy();
  OrderSpec ord(q);
  auto rep = pbw_check(ideal(q, {"x*x - y"}), ord, 6);
  out.require(rep.verdict == PbwVerdict::fails, "verdict " + std::string(to_string(rep.verdict)));
  bool found = false;
  for (const auto& w : rep.witnesses)
    found = found || (w.element == P(q, "x*y - y*x") && !normal_form(lh(w.element), {P(q, "x*x")}, ord).remainder.is_zero());
  out.require(found, "witness x*y - y*x missing");
  const auto with = oracle::graded_dimensions(*q, {P(q, "x*x - y")}, 2, 2);
  const auto lead = oracle::graded_dimensions(*q, {P(q, "x*x")}, 2, 0);
  out.require(with[2] == 2 && lead[2] == 3, "oracle degree-2 dimensions");
  out.require(rep.hilbert[2] == with[2] && rep.hilbert_lh_f[2] == lead[2], "hilbert tables");
  return out;
}

Outcome groebner_form_agreement() {
  Outcome out;
  for (const std::string name : {"weyl.alg", "sl2.alg", "quantum_plane.alg", "x2y.alg", "path_ab.alg"}) {
    const JobSpec job = load(name);
    auto G = complete_to(job.ideal(), job.order(), 8);
    out.require(G.is_complete(), name + ": completion truncated");
    auto rep = cross_check_groebner_forms(G, 8);
    out.require(rep.consistent && rep.original.groebner && rep.leading_homogeneous.groebner && rep.homogenized.groebner,
                name + ": forms disagree or fail");
  }
  return out;
}

// Oracle span degree needed to see every element of the ideal up to degree
// kOracleDegree, read off the provenance of the completion.
std::size_t oracle_slack(const TruncatedGB& G) {
  std::size_t slack = 2;
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    slack = std::max(slack, G.provenance[i].max_term_degree(G.inputs) - degree(G.elements[i]));
  return slack;
}

Outcome oracle_equivalence() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : kFixtures) {
    const JobSpec job = load(name);
    auto G = complete_to(job.ideal(), job.order(), 8);
    out.require(G.is_complete(), name + ": completion truncated");
    const auto expect = oracle::graded_dimensions(*job.algebra, G.inputs, kOracleDegree, oracle_slack(G));
    out.require(hilbert_function(G, kOracleDegree) == expect, name + ": dimensions differ");
  }

  auto q = th::free_xy();
  OrderSpec ord(q);
  gen::Rng rng(7);
  std::size_t compared = 0, drawn = 0;
  while (compared < kRandomIdeals && out.pass) {
    ++drawn;
    std::vector<NcPoly> F;
    for (std::size_t k = 0, n = gen::uniform(rng, 1, 2); k < n; ++k) F.push_back(gen::poly(rng, q, 3, 3, 5));
    bool homogeneous = true;
    for (const auto& f : F) homogeneous = homogeneous && is_homogeneous(f);
    CompletionOptions opt;
    opt.degree_bound = 8;
    opt.max_pairs = 2000;
    std::optional<TruncatedGB> G;
    try {
      G = complete(IdealPresentation(q, F), ord, opt);
    } catch (const ResourceLimitError&) {
      continue;
    }
    // Truncation certifies low degrees only for homogeneous ideals.
    if (!G->is_complete() && !homogeneous) continue;
    const std::size_t slack = homogeneous ? 0 : oracle_slack(*G);
    if (kOracleDegree + slack > kOracleMaxSpan) continue;
    const auto expect = oracle::graded_dimensions(*q, F, kOracleDegree, slack);
    out.require(hilbert_function(*G, kOracleDegree) == expect, "random ideal " + std::to_string(drawn) + " differs");
    ++compared;
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < kOracleSeconds, "runtime " + std::to_string(elapsed) + " s");
  if (out.pass)
    out.detail = std::to_string(kFixtures.size()) + " fixtures, " + std::to_string(compared) + " random ideals (" +
                 std::to_string(drawn) + " drawn) in " + std::to_string(elapsed) + " s";
  return out;
}

Outcome koszul_criterion() {
  Outcome out;
  auto q = th::free_xy();
  OrderSpec ord(q);
  out.require(koszul_quadratic_criterion(ideal(q, {"x*y - 2*y*x"}), ord, 8).verdict == KoszulVerdict::koszul_by_gb,
              "quantum plane");
  out.require(koszul_quadratic_criterion(ideal(q, {"x*y - y*x - 1"}), ord, 8).verdict == KoszulVerdict::koszul_by_gb,
              "Weyl algebra");
  out.require(koszul_quadratic_criterion(ideal(q, {"x*x*x - y"}), ord, 8).verdict == KoszulVerdict::inconclusive,
              "x*x*x - y");
  return out;
}

Outcome determinism() {
  Outcome out;
  for (const auto& name : kFixtures) {
    for (Command cmd : {Command::gb, Command::pbw, Command::gr, Command::rees, Command::hilbert, Command::koszul}) {
      JobSpec job = load(name);
      job.command = cmd;
      auto a = run(job).report, b = run(job).report;
      a.erase("timings");
      b.erase("timings");
      out.require(a.dump(2) == b.dump(2), name + " " + to_string(cmd));
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"homogenization identities", homogenization_identities},
      {"Weyl algebra end to end", weyl_end_to_end},
      {"sl2 end to end", sl2_end_to_end},
      {"negative witness for x*x - y", negative_witness},
      {"Groebner form agreement", groebner_form_agreement},
      {"oracle equivalence", oracle_equivalence},
      {"Koszul criterion", koszul_criterion},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

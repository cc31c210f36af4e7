#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncpbw/buchberger.hpp"
#include "ncpbw/hilbert.hpp"
#include "ncpbw/job.hpp"
#include "ncpbw/pbw.hpp"
#include "ncpbw/reduce.hpp"

namespace ncpbw {

using Json = nlohmann::ordered_json;

/// Exit codes: a definite answer (including "fails"), an answer that
/// truncation or the pair budget kept from being definite, an error.
enum ExitCode : int { kExitDefinite = 0, kExitError = 1, kExitUndecided = 2 };

struct RunResult {
  int exit_code;
  Json report;
};

namespace detail {

inline Json algebra_json(const Quiver& q) {
  Json a;
  if (q.is_free()) {
    a["type"] = "free";
    Json gens = Json::array();
    for (const auto& arr : q.arrows()) gens.push_back(arr.name);
    a["generators"] = gens;
  } else {
    a["type"] = "path";
    a["vertices"] = q.vertices();
    Json arrows = Json::array();
    for (const auto& arr : q.arrows())
      arrows.push_back(arr.name + ":" + q.vertices()[arr.source] + "->" + q.vertices()[arr.target]);
    a["arrows"] = arrows;
  }
  return a;
}

inline Json rendered(const std::vector<NcPoly>& polys, const OrderSpec& ord) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(render(f, ord));
  return out;
}

inline const char* status_of(const TruncatedGB& G, bool exhausted) {
  if (exhausted) return "resource_limit";
  if (G.unit_ideal) return "unit_ideal";
  return to_string(G.status);
}

struct Completed {
  TruncatedGB gb;
  bool exhausted;
};

inline Completed run_completion(const JobSpec& job, const OrderSpec& ord) {
  CompletionOptions opt;
  opt.degree_bound = job.degree_bound;
  opt.max_pairs = job.max_pairs;
  try {
    return {complete(job.ideal(), ord, opt), false};
  } catch (const ResourceLimitError& e) {
    return {e.partial(), true};
  }
}

inline void add_gb_stats(Json& r, const TruncatedGB& G) {
  r["pairs_processed"] = G.pairs_processed;
  r["pairs_discarded"] = G.pairs_discarded;
}

}  // namespace detail

/// Runs one job and assembles its report. Errors in the job itself (such as
/// a unit ideal for pbw) are reported through exit code 1 and an "error" key.
inline RunResult run(const JobSpec& job) {
  const auto started = std::chrono::steady_clock::now();
  const OrderSpec ord = job.order();
  Json r;
  r["command"] = to_string(job.command);
  r["algebra"] = detail::algebra_json(*job.algebra);
  r["order"] = Json{{"scheme", "deglex"}, {"precedence", job.precedence}};
  r["bound"] = job.degree_bound;
  r["max_pairs"] = job.max_pairs;
  r["relations"] = Json::array();
  for (const auto& rel : job.relations) r["relations"].push_back(Json{{"name", rel.name}, {"expression", render(rel.poly, ord)}});
  r["status"] = "complete";
  r["elements"] = Json::array();
  r["witnesses"] = Json::array();
  r["hilbert"] = Json::array();
  int code = kExitDefinite;

  try {
    switch (job.command) {
      case Command::gb:
      case Command::gr:
      case Command::rees:
      case Command::hilbert:
      case Command::nf: {
        auto [G, exhausted] = detail::run_completion(job, ord);
        r["status"] = detail::status_of(G, exhausted);
        detail::add_gb_stats(r, G);
        if (job.command == Command::gr) {
          r["elements"] = detail::rendered(assoc_graded_presentation(G).relations, ord);
        } else if (job.command == Command::rees) {
          r["elements"] = detail::rendered(rees_presentation(G).relations, ord);
        } else {
          r["elements"] = detail::rendered(G.elements, ord);
        }
        r["hilbert"] = hilbert_function(G, job.degree_bound);
        // For homogeneous relations a truncated basis is exact up to the
        // bound, so Hilbert values and low-degree normal forms stay definite.
        // Inhomogeneous ambiguities above the bound can still produce
        // low-degree elements.
        const bool complete = !exhausted && G.status == CompletionStatus::complete;
        bool homogeneous = true;
        for (const auto& rel : job.relations) homogeneous = homogeneous && is_homogeneous(rel.poly);
        bool definite = complete;
        if (job.command == Command::hilbert) definite = complete || (!exhausted && homogeneous);
        if (job.command == Command::nf) {
          if (!job.element) throw Error("nf needs an element to reduce");
          const NcPoly& f = *job.element;
          require_same_algebra(f.algebra(), job.algebra);
          r["element"] = render(f, ord);
          r["normal_form"] = render(normal_form(f, G.elements, ord).remainder, ord);
          definite = complete || (!exhausted && homogeneous && (f.is_zero() || degree(f) <= job.degree_bound));
        }
        code = definite ? kExitDefinite : kExitUndecided;
        break;
      }
      case Command::pbw: {
        PbwReport rep = pbw_check(job.ideal(), ord, job.degree_bound, job.max_pairs);
        r["status"] = detail::status_of(rep.gb, rep.gb_exhausted);
        detail::add_gb_stats(r, rep.gb);
        r["verdict"] = to_string(rep.verdict);
        r["elements"] = detail::rendered(rep.gb.elements, ord);
        for (const auto& w : rep.witnesses)
          r["witnesses"].push_back(Json{{"element", render(w.element, ord)},
                                        {"leading_part", render(w.leading_part, ord)},
                                        {"remainder", render(w.remainder, ord)}});
        r["hilbert"] = rep.hilbert;
        r["lh_relations_gb"] = Json{{"status", detail::status_of(rep.lhF_gb, rep.lhF_exhausted)},
                                    {"elements", detail::rendered(rep.lhF_gb.elements, ord)},
                                    {"hilbert", rep.hilbert_lh_f}};
        r["assoc_graded"] = detail::rendered(rep.assoc_graded.relations, ord);
        r["rees"] = detail::rendered(rep.rees.relations, ord);
        r["diagnostics"] = rep.diagnostics;
        code = rep.verdict == PbwVerdict::undecided ? kExitUndecided : kExitDefinite;
        break;
      }
      case Command::koszul: {
        KoszulReport rep = koszul_quadratic_criterion(job.ideal(), ord, job.degree_bound, job.max_pairs);
        r["status"] = detail::status_of(*rep.gb, rep.exhausted);
        detail::add_gb_stats(r, *rep.gb);
        r["verdict"] = to_string(rep.verdict);
        r["elements"] = detail::rendered(rep.gb->elements, ord);
        r["hilbert"] = hilbert_function(*rep.gb, job.degree_bound);
        r["diagnostics"] = Json::array({rep.reason});
        code = rep.verdict == KoszulVerdict::not_applicable ? kExitUndecided : kExitDefinite;
        break;
      }
    }
  } catch (const Error& e) {
    r["status"] = "error";
    r["error"] = e.what();
    code = kExitError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  r["timings"] = Json{{"total_ms", elapsed.count()}};
  return {code, std::move(r)};
}

/// Plain-text rendering of a report; carries the same verdict and status.
inline std::string render_text(const Json& r) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) { out += key + ": " + value + "\n"; };
  auto list = [&](const std::string& key, const Json& items) {
    out += key + ":\n";
    for (const auto& item : items) out += "  " + (item.is_string() ? item.get<std::string>() : item.dump()) + "\n";
  };
  line("command", r["command"].get<std::string>());
  line("bound", std::to_string(r["bound"].get<std::size_t>()));
  line("status", r["status"].get<std::string>());
  if (r.contains("error")) line("error", r["error"].get<std::string>());
  if (r.contains("verdict")) line("verdict", r["verdict"].get<std::string>());
  if (r.contains("normal_form")) line("normal form", r["normal_form"].get<std::string>());
  if (!r["elements"].empty()) list("elements", r["elements"]);
  if (!r["witnesses"].empty()) {
    out += "witnesses:\n";
    for (const auto& w : r["witnesses"])
      out += "  " + w["element"].get<std::string>() + "  (remainder " + w["remainder"].get<std::string>() + ")\n";
  }
  if (r.contains("assoc_graded")) list("assoc-graded relations", r["assoc_graded"]);
  if (r.contains("rees")) list("rees relations", r["rees"]);
  if (!r["hilbert"].empty()) {
    std::string h;
    for (const auto& v : r["hilbert"]) h += (h.empty() ? "" : " ") + v.dump();
    line("hilbert", h);
  }
  if (r.contains("diagnostics") && !r["diagnostics"].empty()) list("diagnostics", r["diagnostics"]);
  return out;
}

}  // namespace ncpbw

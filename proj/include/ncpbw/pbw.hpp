#pragma once

#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncpbw/buchberger.hpp"
#include "ncpbw/hilbert.hpp"
#include "ncpbw/order.hpp"
#include "ncpbw/poly.hpp"
#include "ncpbw/reduce.hpp"

namespace ncpbw {

class UnitIdealError : public Error {
 public:
  UnitIdealError() : Error("the relations generate the unit ideal; the quotient algebra is zero") {}
};

/// f = f_p + f_{p-1} + ... + f_{p-s}  ->  f_p + t f_{p-1} + ... + t^s f_{p-s}.
inline NcPoly homogenize(const NcPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("homogenize");
  if (f.has_t()) throw Error("homogenize: argument must lie in R (no t)");
  const std::size_t p = degree(f);
  NcPoly out(f.algebra());
  for (const auto& [m, c] : f.terms())
    out.add_term_unchecked(m.with_tpow(static_cast<std::uint32_t>(p - m.degree())), c);
  return out;
}

/// t -> 1.
inline NcPoly dehomogenize(const NcPoly& F) {
  NcPoly out(F.algebra());
  for (const auto& [m, c] : F.terms()) out.add_term_unchecked(m.word_part(), c);
  return out;
}

enum class PbwVerdict { holds, fails, undecided };

inline const char* to_string(PbwVerdict v) {
  switch (v) {
    case PbwVerdict::holds: return "holds";
    case PbwVerdict::fails: return "fails";
    case PbwVerdict::undecided: return "undecided";
  }
  return "undecided";
}

enum class PresentationKind { assoc_graded, rees };

inline const char* to_string(PresentationKind k) { return k == PresentationKind::assoc_graded ? "assoc-graded" : "rees"; }

/// A graded quotient R/<relations> (assoc-graded) or R[t]/<relations> (rees).
struct GradedPresentation {
  Quiver::Ptr algebra;
  std::vector<NcPoly> relations;
  PresentationKind kind;
};

inline GradedPresentation assoc_graded_presentation(const TruncatedGB& G) {
  GradedPresentation p{G.order.algebra(), {}, PresentationKind::assoc_graded};
  for (const auto& g : G.elements) p.relations.push_back(lh(g));
  return p;
}

inline GradedPresentation rees_presentation(const TruncatedGB& G) {
  GradedPresentation p{G.order.algebra(), {}, PresentationKind::rees};
  for (const auto& g : G.elements) p.relations.push_back(homogenize(g));
  return p;
}

/// A basis element whose leading homogeneous part is not in <LH(F)>.
struct PbwWitness {
  NcPoly element;
  NcPoly leading_part;
  NcPoly remainder;
};

struct PbwReport {
  PbwVerdict verdict;
  TruncatedGB gb;      ///< completion of F
  TruncatedGB lhF_gb;  ///< completion of LH(F)
  std::vector<PbwWitness> witnesses;
  GradedPresentation assoc_graded;
  GradedPresentation rees;
  std::vector<std::uint64_t> hilbert;       ///< G(A) = R/<LH(G)>
  std::vector<std::uint64_t> hilbert_lh_f;  ///< R/<LH(F)>
  std::vector<std::string> diagnostics;
  bool gb_exhausted = false;    ///< pair budget ran out completing F
  bool lhF_exhausted = false;   ///< pair budget ran out completing LH(F)
};

/// Decides whether <LH(F)> = <LH(I)> for I = <F>, up to the degree bound:
/// complete F to G, complete LH(F) to H, and reduce every LH(g) modulo H.
inline PbwReport pbw_check(const IdealPresentation& F, const OrderSpec& ord, std::size_t bound,
                           std::size_t max_pairs = 100000) {
  std::vector<NcPoly> leading;
  for (const auto& f : F.generators) leading.push_back(lh(f));
  const IdealPresentation lhF(F.algebra, leading);
  CompletionOptions opt;
  opt.degree_bound = bound;
  opt.max_pairs = max_pairs;

  std::vector<std::string> diagnostics;
  struct Outcome {
    std::optional<TruncatedGB> gb;
    bool exhausted = false;
  };
  auto run = [&opt](const IdealPresentation& P, const OrderSpec& o) {
    Outcome out;
    try {
      out.gb = complete(P, o, opt);
    } catch (const ResourceLimitError& e) {
      out.gb = e.partial();
      out.exhausted = true;
    }
    return out;
  };
  // The two completions are independent.
  auto pending = std::async(std::launch::async, run, std::cref(lhF), std::cref(ord));
  Outcome g = run(F, ord);
  Outcome h = pending.get();

  if (g.gb->unit_ideal) throw UnitIdealError();
  if (g.exhausted) diagnostics.push_back("pair budget exhausted while completing the relations");
  if (h.exhausted) diagnostics.push_back("pair budget exhausted while completing the leading parts");
  if (!g.gb->is_complete()) diagnostics.push_back("Groebner basis of the relations truncated at degree " + std::to_string(bound));
  if (!h.gb->is_complete()) diagnostics.push_back("Groebner basis of the leading parts truncated at degree " + std::to_string(bound));

  std::vector<PbwWitness> witnesses;
  Reducer by_h(h.gb->elements, ord);
  for (const auto& elem : g.gb->elements) {
    NcPoly top = lh(elem);
    NcPoly r = by_h.remainder(top);
    if (!r.is_zero()) witnesses.push_back({elem, std::move(top), std::move(r)});
  }

  // H is a homogeneous completion with the normal strategy, so even when
  // truncated it decides membership of homogeneous elements up to the bound.
  PbwVerdict verdict = PbwVerdict::undecided;
  if (!witnesses.empty() && !h.exhausted) {
    verdict = PbwVerdict::fails;
  } else if (witnesses.empty() && !g.exhausted && !h.exhausted && g.gb->is_complete() && h.gb->is_complete()) {
    verdict = PbwVerdict::holds;
  }

  PbwReport report{verdict,
                   std::move(*g.gb),
                   std::move(*h.gb),
                   std::move(witnesses),
                   {},
                   {},
                   {},
                   {},
                   std::move(diagnostics),
                   g.exhausted,
                   h.exhausted};
  report.assoc_graded = assoc_graded_presentation(report.gb);
  report.rees = rees_presentation(report.gb);
  report.hilbert = hilbert_function(report.gb, bound);
  report.hilbert_lh_f = hilbert_function(report.lhF_gb, bound);
  return report;
}

namespace detail {

/// Rank of a list of polynomials viewed as coefficient vectors.
inline std::size_t rank(const std::vector<NcPoly>& polys) {
  std::map<Monomial, NcPoly::TermMap, StructuralLess> pivots;
  std::size_t r = 0;
  for (const auto& p : polys) {
    NcPoly::TermMap row = p.terms();
    while (!row.empty()) {
      auto top = std::prev(row.end());
      auto it = pivots.find(top->first);
      if (it == pivots.end()) {
        pivots.emplace(top->first, std::move(row));
        ++r;
        break;
      }
      const Scalar factor = top->second / std::prev(it->second.end())->second;
      for (const auto& [m, c] : it->second) {
        auto& slot = row[m];
        slot -= factor * c;
        if (sgn(slot) == 0) row.erase(m);
      }
    }
  }
  return r;
}

}  // namespace detail

/// Shape of a set of relations relative to its top degree N.
struct RelationClassification {
  std::size_t top_degree = 0;
  /// Every generator has degree exactly N, so LH(F) is N-homogeneous.
  bool uniform_top_degree = true;
  /// span(F) meets F_{N-1}R only in 0.
  bool condition_a = true;
  bool homogeneous = true;
  /// Generators of degree below N.
  std::vector<std::size_t> low_degree_generators;
};

inline RelationClassification classify_relations(const IdealPresentation& F) {
  RelationClassification c;
  for (const auto& f : F.generators) c.top_degree = std::max(c.top_degree, degree(f));
  std::vector<NcPoly> tops;
  for (std::size_t i = 0; i < F.generators.size(); ++i) {
    const auto& f = F.generators[i];
    if (degree(f) < c.top_degree) {
      c.uniform_top_degree = false;
      c.low_degree_generators.push_back(i);
    }
    if (!is_homogeneous(f)) c.homogeneous = false;
    tops.push_back(homogeneous_part(f, c.top_degree));
  }
  c.condition_a = detail::rank(F.generators) == detail::rank(tops);
  return c;
}

/// Groebner verdict for one of the three forms of a basis.
struct FormVerdict {
  bool groebner = true;
  std::optional<Ambiguity> witness;
};

struct CrossCheckReport {
  FormVerdict original;            ///< G in R
  FormVerdict leading_homogeneous; ///< LH(G) as a basis of <LH(I)>
  FormVerdict homogenized;         ///< G* in R[t] as a basis of <I*>
  std::size_t ambiguities_checked = 0;
  bool consistent = true;
};

/// Checks, ambiguity by ambiguity up to the bound, that G is Groebner in R,
/// that LH(G) is a Groebner basis of <LH(I)>, and that G* is a Groebner
/// basis of <I*> in R[t] under the extended ordering. The three verdicts
/// must agree. Besides each form's own S-polynomials, the LH and
/// homogenized forms must also reduce LH(s), s* for the S-polynomial s of G
/// and its remainder, since those lie in <LH(I)> and <I*>.
inline CrossCheckReport cross_check_groebner_forms(const TruncatedGB& G, std::size_t bound) {
  const OrderSpec& ord = G.order;
  const auto& base = G.elements;
  std::vector<NcPoly> leading, homog;
  for (const auto& g : base) {
    leading.push_back(lh(g));
    homog.push_back(homogenize(g));
  }
  CrossCheckReport rep;
  if (base.empty()) return rep;
  Reducer r_base(base, ord), r_lead(leading, ord), r_homog(homog, ord);

  auto fail = [](FormVerdict& v, const Ambiguity& a) {
    v.groebner = false;
    v.witness = a;
  };
  for (const auto& amb : find_ambiguities(base, ord)) {
    if (amb.degree() > bound) break;
    ++rep.ambiguities_checked;
    const NcPoly s = s_polynomial(amb, base, ord);
    const NcPoly r = r_base.remainder(s);
    if (rep.original.groebner && !r.is_zero()) fail(rep.original, amb);

    if (rep.leading_homogeneous.groebner) {
      bool ok = r_lead.remainder(s_polynomial(amb, leading, ord)).is_zero();
      for (const NcPoly* x : {&s, &r})
        if (ok && !x->is_zero()) ok = r_lead.remainder(lh(*x)).is_zero();
      if (!ok) fail(rep.leading_homogeneous, amb);
    }
    if (rep.homogenized.groebner) {
      bool ok = r_homog.remainder(s_polynomial(amb, homog, ord)).is_zero();
      for (const NcPoly* x : {&s, &r})
        if (ok && !x->is_zero()) ok = r_homog.remainder(homogenize(*x)).is_zero();
      if (!ok) fail(rep.homogenized, amb);
    }
    if (!rep.original.groebner && !rep.leading_homogeneous.groebner && !rep.homogenized.groebner) break;
  }
  rep.consistent = rep.original.groebner == rep.leading_homogeneous.groebner &&
                   rep.original.groebner == rep.homogenized.groebner;
  return rep;
}

enum class KoszulVerdict { koszul_by_gb, inconclusive, not_applicable };

inline const char* to_string(KoszulVerdict v) {
  switch (v) {
    case KoszulVerdict::koszul_by_gb: return "koszul-by-gb";
    case KoszulVerdict::inconclusive: return "inconclusive";
    case KoszulVerdict::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

struct KoszulReport {
  KoszulVerdict verdict;
  std::optional<TruncatedGB> gb;
  std::size_t max_element_degree = 0;
  std::string reason;
  bool exhausted = false;
};

/// Sufficient criterion: a complete reduced Groebner basis inside F_2R makes
/// both G(A) and the Rees algebra Koszul. Never claims non-Koszulity.
inline KoszulReport koszul_quadratic_criterion(const IdealPresentation& F, const OrderSpec& ord, std::size_t bound,
                                               std::size_t max_pairs = 100000) {
  CompletionOptions opt;
  opt.degree_bound = bound;
  opt.max_pairs = max_pairs;
  KoszulReport rep{KoszulVerdict::not_applicable, std::nullopt, 0, {}};
  try {
    rep.gb = complete(F, ord, opt);
  } catch (const ResourceLimitError& e) {
    rep.gb = e.partial();
    rep.reason = e.what();
    rep.exhausted = true;
    return rep;
  }
  for (const auto& g : rep.gb->elements) rep.max_element_degree = std::max(rep.max_element_degree, degree(g));
  if (rep.gb->unit_ideal) {
    rep.reason = "unit ideal";
  } else if (!rep.gb->is_complete()) {
    rep.reason = "Groebner basis truncated at degree " + std::to_string(bound);
  } else if (rep.max_element_degree <= 2) {
    rep.verdict = KoszulVerdict::koszul_by_gb;
    rep.reason = "reduced Groebner basis is contained in F_2R";
  } else {
    rep.verdict = KoszulVerdict::inconclusive;
    rep.reason = "reduced Groebner basis has an element of degree " + std::to_string(rep.max_element_degree);
  }
  return rep;
}

}  // namespace ncpbw

#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "ncpbw/order.hpp"
#include "ncpbw/poly.hpp"
#include "ncpbw/reduce.hpp"
#include "ncpbw/subword_index.hpp"

namespace ncpbw {

enum class AmbiguityKind { overlap, inclusion };

/// Two ways of rewriting the superposition word:
///   word = left1 * LM(G[first]) * right1 = left2 * LM(G[second]) * right2.
/// For an overlap, `position` is the length of the shared part; for an
/// inclusion it is the offset of LM(G[second]) inside LM(G[first]).
struct Ambiguity {
  AmbiguityKind kind;
  std::size_t first;
  std::size_t second;
  std::size_t position;
  Monomial word;
  Monomial left1, right1, left2, right2;

  std::size_t degree() const noexcept { return word.degree(); }
};

inline const char* to_string(AmbiguityKind k) { return k == AmbiguityKind::overlap ? "overlap" : "inclusion"; }

namespace detail {

inline void require_t_free_lead(const Monomial& m) {
  if (m.tpow() != 0)
    throw Error("ambiguities are only computed for leading monomials without a t-power");
}

/// Ambiguities of the ordered pair (i, j): overlaps where a suffix of a
/// meets a prefix of b, and inclusions of b inside a.
inline void pair_ambiguities(const Quiver& q, const Monomial& a, const Monomial& b, std::size_t i,
                             std::size_t j, std::vector<Ambiguity>& out) {
  require_t_free_lead(a);
  require_t_free_lead(b);
  const std::size_t la = a.length(), lb = b.length();
  if (la > 0 && lb > 0) {
    for (std::size_t k = 1; k < la && k < lb; ++k) {
      if (!std::equal(a.word().end() - static_cast<std::ptrdiff_t>(k), a.word().end(), b.word().begin())) continue;
      Monomial tail = q.subpath(b, k, lb - k);
      Monomial head = q.subpath(a, 0, la - k);
      Monomial word = *q.product(a, tail);
      out.push_back({AmbiguityKind::overlap, i, j, k, word, q.subpath(word, 0, 0), tail, head,
                     q.subpath(word, word.length(), 0)});
    }
  }
  if (i == j) return;
  const bool equal = a == b;
  if (equal && i > j) return;
  if (!equal && lb >= la) return;
  for (std::size_t pos : occurrences(q, b, a)) {
    Monomial left2 = q.subpath(a, 0, pos);
    Monomial right2 = q.subpath(a, pos + lb, la - pos - lb);
    out.push_back({AmbiguityKind::inclusion, i, j, pos, a, q.subpath(a, 0, 0), q.subpath(a, la, 0),
                   left2, right2});
  }
}

inline bool ambiguity_less(const Ambiguity& x, const Ambiguity& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  if (x.first != y.first) return x.first < y.first;
  if (x.second != y.second) return x.second < y.second;
  if (x.kind != y.kind) return x.kind < y.kind;
  return x.position < y.position;
}

inline bool is_uniform(const NcPoly& f) {
  if (f.is_zero()) return true;
  const Quiver& q = f.quiver();
  const auto& first = f.terms().begin()->first;
  const VertexId s = q.source(first), t = q.target(first);
  for (const auto& [m, c] : f.terms())
    if (q.source(m) != s || q.target(m) != t) return false;
  return true;
}

}  // namespace detail

/// Every overlap and inclusion ambiguity among the leading monomials of G,
/// self-pairs included, sorted by degree and then pair indices.
inline std::vector<Ambiguity> find_ambiguities(const std::vector<NcPoly>& G, const OrderSpec& ord) {
  std::vector<Monomial> leads;
  for (const auto& g : G) leads.push_back(lm(g, ord));
  std::vector<Ambiguity> out;
  const Quiver& q = *ord.algebra();
  for (std::size_t i = 0; i < leads.size(); ++i)
    for (std::size_t j = 0; j < leads.size(); ++j) detail::pair_ambiguities(q, leads[i], leads[j], i, j, out);
  std::sort(out.begin(), out.end(), detail::ambiguity_less);
  return out;
}

/// left1*g_i*right1/lc(g_i) - left2*g_j*right2/lc(g_j); the superposition
/// word cancels.
inline NcPoly s_polynomial(const Ambiguity& amb, const std::vector<NcPoly>& G, const OrderSpec& ord) {
  const NcPoly& gi = G.at(amb.first);
  const NcPoly& gj = G.at(amb.second);
  NcPoly out(gi.algebra());
  gi.accumulate_sandwich(out, 1 / lc(gi, ord), amb.left1, amb.right1);
  gj.accumulate_sandwich(out, -1 / lc(gj, ord), amb.left2, amb.right2);
  return out;
}

enum class CompletionStatus { complete, truncated };

inline const char* to_string(CompletionStatus s) { return s == CompletionStatus::complete ? "complete" : "truncated"; }

struct CompletionOptions {
  std::size_t degree_bound = 8;
  std::size_t max_pairs = 100000;
  /// Record for every element how it is built from the inputs.
  bool track_provenance = true;
};

/// Result of a degree-bounded completion. With status complete every
/// ambiguity of every degree was resolved; with status truncated the
/// ambiguities above `bound` were discarded and conclusions hold up to the
/// bound only.
struct TruncatedGB {
  std::vector<NcPoly> elements;
  OrderSpec order;
  std::size_t bound = 0;
  CompletionStatus status = CompletionStatus::complete;
  bool unit_ideal = false;
  std::size_t pairs_processed = 0;
  std::size_t pairs_discarded = 0;
  /// The generators the completion started from.
  std::vector<NcPoly> inputs{};
  /// provenance[k] expands to elements[k] over `inputs` (when tracked).
  std::vector<Provenance> provenance{};
  /// Division of each input by `elements`.
  std::vector<ReductionCertificate> input_certificates{};

  bool is_complete() const noexcept { return status == CompletionStatus::complete; }
};

class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, TruncatedGB partial)
      : Error(what), partial_(std::move(partial)) {}
  const TruncatedGB& partial() const noexcept { return partial_; }

 private:
  TruncatedGB partial_;
};

namespace detail {

class Completion {
 public:
  Completion(const IdealPresentation& F, const OrderSpec& ord, const CompletionOptions& opt)
      : F_(F), ord_(ord), opt_(opt), reducer_(ord), quiver_(*ord.algebra()),
        covered_(quiver_.vertex_count(), false) {}

  TruncatedGB run() {
    require_same_algebra(F_.algebra, ord_.algebra());
    std::size_t top = 0;
    for (const auto& f : F_.generators) {
      if (f.has_t()) throw Error("complete: generators must lie in R (no t)");
      top = std::max(top, degree(f));
    }
    if (opt_.degree_bound < top)
      throw Error("complete: degree bound " + std::to_string(opt_.degree_bound) +
                  " is below the generator degree " + std::to_string(top));

    // Path-algebra generators are split into uniform components e_v f e_w.
    for (std::size_t i = 0; i < F_.generators.size() && !unit_; ++i) {
      for (auto& piece : uniform_pieces(i)) {
        Tracked r = reduce(piece);
        if (!r.poly.is_zero()) adjoin(std::move(r));
        if (unit_) break;
      }
    }

    while (!queue_.empty() && !unit_) {
      const Ambiguity amb = queue_.top().amb;
      queue_.pop();
      if (processed_ >= opt_.max_pairs) {
        throw ResourceLimitError("complete: pair budget of " + std::to_string(opt_.max_pairs) + " exhausted",
                                 finish(CompletionStatus::truncated));
      }
      ++processed_;
      Tracked s = s_poly(amb);
      if (s.poly.is_zero()) continue;
      Tracked r = reduce(s);
      if (!r.poly.is_zero()) adjoin(std::move(r));
    }
    return finish(unit_ || discarded_ == 0 ? CompletionStatus::complete : CompletionStatus::truncated);
  }

 private:
  struct Queued {
    Ambiguity amb;
    std::size_t seq;
  };
  struct QueueOrder {
    bool operator()(const Queued& a, const Queued& b) const {
      if (a.amb.degree() != b.amb.degree()) return a.amb.degree() > b.amb.degree();
      return a.seq > b.seq;
    }
  };

  bool track() const { return opt_.track_provenance; }

  std::vector<Tracked> uniform_pieces(std::size_t i) {
    const NcPoly& f = F_.generators[i];
    std::vector<Tracked> out;
    if (quiver_.is_free() || is_uniform(f)) {
      out.push_back({f, track() ? Provenance::of_input(i) : Provenance{}});
      return out;
    }
    for (VertexId v = 0; v < quiver_.vertex_count(); ++v) {
      for (VertexId w = 0; w < quiver_.vertex_count(); ++w) {
        Monomial ev = Monomial::idempotent(v), ew = Monomial::idempotent(w);
        NcPoly piece = f.sandwich(ev, ew);
        if (piece.is_zero()) continue;
        Provenance p;
        if (track()) p.add_sandwich(Provenance::of_input(i), 1, ev, ew, quiver_);
        out.push_back({std::move(piece), std::move(p)});
      }
    }
    return out;
  }

  Tracked reduce(const Tracked& t) {
    std::vector<const Provenance*> provs;
    if (track())
      for (const auto& b : basis_) provs.push_back(&b.provenance);
    return reduce_tracked(t, reducer_, provs, track());
  }

  Tracked s_poly(const Ambiguity& amb) {
    const Tracked& gi = basis_[amb.first];
    const Tracked& gj = basis_[amb.second];
    // Basis elements are monic.
    Tracked out{NcPoly(gi.poly.algebra()), {}};
    gi.poly.accumulate_sandwich(out.poly, 1, amb.left1, amb.right1);
    gj.poly.accumulate_sandwich(out.poly, -1, amb.left2, amb.right2);
    if (track()) {
      out.provenance.add_sandwich(gi.provenance, 1, amb.left1, amb.right1, quiver_);
      out.provenance.add_sandwich(gj.provenance, -1, amb.left2, amb.right2, quiver_);
    }
    return out;
  }

  void adjoin(Tracked r) {
    make_monic(r, ord_, track());
    const Monomial lead = lm(r.poly, ord_);
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(r));
    leads_.push_back(lead);
    reducer_.add(basis_.back().poly);

    if (lead.is_idempotent()) {
      if (quiver_.is_free()) {
        unit_ = true;
      } else {
        covered_[lead.vertex()] = true;
        unit_ = std::all_of(covered_.begin(), covered_.end(), [](bool b) { return b; });
      }
      if (unit_) return;
    }

    std::vector<Ambiguity> fresh;
    for (std::size_t j = 0; j <= idx; ++j) {
      pair_ambiguities(quiver_, leads_[idx], leads_[j], idx, j, fresh);
      if (j != idx) pair_ambiguities(quiver_, leads_[j], leads_[idx], j, idx, fresh);
    }
    std::sort(fresh.begin(), fresh.end(), ambiguity_less);
    for (auto& a : fresh) {
      if (a.degree() > opt_.degree_bound) {
        ++discarded_;
        continue;
      }
      queue_.push({std::move(a), seq_++});
    }
  }

  TruncatedGB finish(CompletionStatus status) {
    std::vector<Tracked> reduced = interreduce_tracked(basis_, ord_, track());
    TruncatedGB gb{.elements = {}, .order = ord_, .bound = opt_.degree_bound, .status = status};
    gb.unit_ideal = unit_;
    gb.pairs_processed = processed_;
    gb.pairs_discarded = discarded_;
    gb.inputs = F_.generators;
    for (auto& t : reduced) {
      gb.elements.push_back(std::move(t.poly));
      if (track()) gb.provenance.push_back(std::move(t.provenance));
    }
    Reducer final_reducer(gb.elements, ord_);
    for (const auto& f : F_.generators) gb.input_certificates.push_back(final_reducer.reduce(f));
    return gb;
  }

  const IdealPresentation& F_;
  OrderSpec ord_;
  CompletionOptions opt_;
  Reducer reducer_;
  const Quiver& quiver_;
  std::vector<Tracked> basis_;
  std::vector<Monomial> leads_;
  std::priority_queue<Queued, std::vector<Queued>, QueueOrder> queue_;
  std::vector<bool> covered_;
  std::size_t seq_ = 0;
  std::size_t processed_ = 0;
  std::size_t discarded_ = 0;
  bool unit_ = false;
};

}  // namespace detail

/// Degree-bounded noncommutative Buchberger completion (normal strategy:
/// ambiguities by increasing superposition degree, FIFO on ties). Throws
/// ResourceLimitError, carrying the partial basis, when more than max_pairs
/// ambiguities would be processed.
inline TruncatedGB complete(const IdealPresentation& F, const OrderSpec& ord, const CompletionOptions& opt = {}) {
  return detail::Completion(F, ord, opt).run();
}

struct GroebnerVerdict {
  bool groebner = true;
  std::optional<Ambiguity> witness;
  /// Normal form of the witness S-polynomial (nonzero when present).
  std::optional<NcPoly> witness_remainder;
  std::size_t ambiguities_checked = 0;
};

/// Checks every ambiguity of degree <= bound and reports the first one (in
/// ambiguity order) whose S-polynomial does not reduce to zero. Works in R
/// and in R[t]; leading monomials must be t-free, and in a path algebra the
/// elements must be uniform.
inline GroebnerVerdict is_groebner(const std::vector<NcPoly>& G, const OrderSpec& ord, std::size_t bound) {
  GroebnerVerdict v;
  for (const auto& g : G) {
    if (g.is_zero()) throw Error("is_groebner: zero element");
    if (!detail::is_uniform(g)) throw Error("is_groebner: path-algebra elements must be uniform");
  }
  if (G.empty()) return v;
  Reducer red(G, ord);
  for (const auto& amb : find_ambiguities(G, ord)) {
    if (amb.degree() > bound) break;
    ++v.ambiguities_checked;
    NcPoly r = red.remainder(s_polynomial(amb, G, ord));
    if (!r.is_zero()) {
      v.groebner = false;
      v.witness = amb;
      v.witness_remainder = std::move(r);
      return v;
    }
  }
  return v;
}

}  // namespace ncpbw

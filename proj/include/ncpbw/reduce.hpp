#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ncpbw/order.hpp"
#include "ncpbw/poly.hpp"
#include "ncpbw/subword_index.hpp"

namespace ncpbw {

/// One step of a division: coefficient * left * G[divisor] * right.
struct QuotientTerm {
  Scalar coefficient;
  Monomial left;
  std::size_t divisor;
  Monomial right;
};

/// f = sum of quotient terms + remainder, exactly.
struct ReductionCertificate {
  std::vector<QuotientTerm> quotient;
  NcPoly remainder;
};

enum class MatchStrategy { automaton, naive };

/// Total reduction modulo an indexed list of divisors. Deterministic policy:
/// always rewrite the largest reducible monomial, using the lowest divisor
/// index and then the leftmost occurrence.
class Reducer {
 public:
  explicit Reducer(OrderSpec ord, MatchStrategy strategy = MatchStrategy::automaton)
      : order_(std::move(ord)), index_(order_.algebra()), strategy_(strategy) {}

  Reducer(const std::vector<NcPoly>& divisors, OrderSpec ord,
          MatchStrategy strategy = MatchStrategy::automaton)
      : Reducer(std::move(ord), strategy) {
    for (const auto& g : divisors) push(g);
    index_ = SubwordIndex(order_.algebra(), leads_);
  }

  void add(const NcPoly& g) {
    push(g);
    index_.add(leads_.back());
  }

  const std::vector<NcPoly>& divisors() const noexcept { return divisors_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }
  const OrderSpec& order() const noexcept { return order_; }

  std::optional<Occurrence> find_divisor(const Monomial& m) const {
    if (strategy_ == MatchStrategy::naive) return naive_first_divisor(*order_.algebra(), leads_, m);
    return index_.first_divisor(m);
  }

  ReductionCertificate reduce(const NcPoly& f, bool record_quotient = true) const {
    require_same_algebra(f.algebra(), order_.algebra());
    const Quiver& q = f.quiver();
    std::map<Monomial, Scalar, DescendingBy> work(DescendingBy{&order_});
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    ReductionCertificate cert{{}, NcPoly(f.algebra())};
    while (!work.empty()) {
      auto top = work.begin();
      const Monomial m = top->first;
      const Scalar c = top->second;
      auto occ = find_divisor(m);
      if (!occ) {
        cert.remainder.add_term_unchecked(m, c);
        work.erase(top);
        continue;
      }
      const Monomial& lead = leads_[occ->pattern];
      Monomial left = q.subpath(m, 0, occ->position).with_tpow(m.tpow() - lead.tpow());
      Monomial right = q.subpath(m, occ->position + lead.length(), m.length() - occ->position - lead.length());
      const Scalar factor = c * inverse_lc_[occ->pattern];
      for (const auto& [gm, gc] : divisors_[occ->pattern].terms()) {
        auto lg = q.product(left, gm);
        if (!lg) continue;
        auto lgr = q.product(*lg, right);
        if (!lgr) continue;
        Scalar delta = -factor * gc;
        auto [it, inserted] = work.try_emplace(*lgr, delta);
        if (!inserted) {
          it->second += delta;
          if (sgn(it->second) == 0) work.erase(it);
        }
      }
      if (record_quotient) cert.quotient.push_back({factor, std::move(left), occ->pattern, std::move(right)});
    }
    return cert;
  }

  NcPoly remainder(const NcPoly& f) const { return reduce(f, false).remainder; }

 private:
  void push(const NcPoly& g) {
    if (g.is_zero()) throw Error("normal_form: zero divisor");
    require_same_algebra(g.algebra(), order_.algebra());
    const auto& [m, c] = leading_term(g, order_);
    divisors_.push_back(g);
    leads_.push_back(m);
    inverse_lc_.push_back(1 / c);
  }

  OrderSpec order_;
  SubwordIndex index_;
  MatchStrategy strategy_;
  std::vector<NcPoly> divisors_;
  std::vector<Monomial> leads_;
  std::vector<Scalar> inverse_lc_;
};

inline ReductionCertificate normal_form(const NcPoly& f, const std::vector<NcPoly>& divisors,
                                        const OrderSpec& ord) {
  return Reducer(divisors, ord).reduce(f);
}

/// Sum of quotient terms plus remainder; reproduces the reduced element.
inline NcPoly expand(const ReductionCertificate& cert, const std::vector<NcPoly>& divisors) {
  NcPoly out = cert.remainder;
  for (const auto& t : cert.quotient) divisors.at(t.divisor).accumulate_sandwich(out, t.coefficient, t.left, t.right);
  return out;
}

/// Sort key of a reduced basis: degree of LM ascending, then LM descending.
inline void sort_basis(std::vector<NcPoly>& basis, const OrderSpec& ord) {
  std::vector<std::pair<Monomial, NcPoly>> keyed;
  keyed.reserve(basis.size());
  for (auto& g : basis) keyed.emplace_back(lm(g, ord), std::move(g));
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return ord.greater(a.first, b.first);
  });
  basis.clear();
  for (auto& [m, g] : keyed) basis.push_back(std::move(g));
}

/// A linear combination sum c * left * F[input] * right expressing an element
/// in terms of an indexed generating set F. An empty cofactor stands for the
/// unit of R (which in a path algebra is a sum of idempotents, not a
/// monomial).
class Provenance {
 public:
  struct Key {
    std::optional<Monomial> left;
    std::size_t input;
    std::optional<Monomial> right;
  };

  static Provenance of_input(std::size_t i) {
    Provenance p;
    p.terms_.emplace(Key{std::nullopt, i, std::nullopt}, Scalar(1));
    return p;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// this += c * left * other * right. Cofactor products that vanish in the
  /// path algebra drop the term.
  void add_sandwich(const Provenance& other, const Scalar& c, const Monomial& left,
                    const Monomial& right, const Quiver& q) {
    for (const auto& [k, a] : other.terms_) {
      Key nk{left, k.input, right};
      if (k.left) {
        auto l = q.product(left, *k.left);
        if (!l) continue;
        nk.left = std::move(*l);
      }
      if (k.right) {
        auto r = q.product(*k.right, right);
        if (!r) continue;
        nk.right = std::move(*r);
      }
      accumulate(std::move(nk), c * a);
    }
  }

  void add_scaled(const Provenance& other, const Scalar& c) {
    for (const auto& [k, a] : other.terms_) accumulate(k, c * a);
  }

  Provenance& operator*=(const Scalar& c) {
    for (auto& [k, a] : terms_) a *= c;
    return *this;
  }

  /// Evaluates the combination against the generating set.
  NcPoly expand(const std::vector<NcPoly>& inputs, const Quiver::Ptr& algebra) const {
    NcPoly out(algebra);
    const Quiver& q = *algebra;
    for (const auto& [k, a] : terms_) {
      for (const auto& [m, c] : inputs.at(k.input).terms()) {
        std::optional<Monomial> x = m;
        if (k.left) x = q.product(*k.left, *x);
        if (x && k.right) x = q.product(*x, *k.right);
        if (x) out.add_term_unchecked(*x, a * c);
      }
    }
    return out;
  }

  /// Largest d(left) + d(F[input]) + d(right) over the terms.
  std::size_t max_term_degree(const std::vector<NcPoly>& inputs) const {
    std::size_t d = 0;
    for (const auto& [k, a] : terms_) {
      std::size_t td = degree(inputs.at(k.input));
      if (k.left) td += k.left->degree();
      if (k.right) td += k.right->degree();
      d = std::max(d, td);
    }
    return d;
  }

 private:
  struct KeyLess {
    static int cmp(const std::optional<Monomial>& a, const std::optional<Monomial>& b) {
      if (a.has_value() != b.has_value()) return a.has_value() ? 1 : -1;
      if (!a) return 0;
      auto c = structural_compare(*a, *b);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    bool operator()(const Key& a, const Key& b) const {
      if (a.input != b.input) return a.input < b.input;
      if (int c = cmp(a.left, b.left)) return c < 0;
      return cmp(a.right, b.right) < 0;
    }
  };

  void accumulate(Key k, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  std::map<Key, Scalar, KeyLess> terms_;
};

/// A polynomial together with (optionally) how it arises from the inputs.
struct Tracked {
  NcPoly poly;
  Provenance provenance;
};

/// Reduces t modulo the reducer's divisors, carrying provenance through
/// the certificate when `track` is set. divisor_provenance[i] belongs to
/// reducer.divisors()[i].
inline Tracked reduce_tracked(const Tracked& t, const Reducer& reducer,
                              const std::vector<const Provenance*>& divisor_provenance, bool track) {
  auto cert = reducer.reduce(t.poly, track);
  Tracked out{std::move(cert.remainder), {}};
  if (track) {
    out.provenance = t.provenance;
    const Quiver& q = t.poly.quiver();
    for (const auto& qt : cert.quotient)
      out.provenance.add_sandwich(*divisor_provenance.at(qt.divisor), -qt.coefficient, qt.left, qt.right, q);
  }
  return out;
}

inline void make_monic(Tracked& t, const OrderSpec& ord, bool track) {
  Scalar inv = 1 / lc(t.poly, ord);
  t.poly *= inv;
  if (track) t.provenance *= inv;
}

/// Interreduction with provenance: the result is monic, no monomial of any
/// element is divisible by the leading monomial of another element, and it
/// spans the same ideal. Sorted by sort_basis order.
inline std::vector<Tracked> interreduce_tracked(std::vector<Tracked> input, const OrderSpec& ord, bool track) {
  std::vector<Tracked> work;
  for (auto& t : input)
    if (!t.poly.is_zero()) work.push_back(std::move(t));
  std::vector<Tracked> result;
  std::vector<Monomial> result_lm;

  auto provenances = [](const std::vector<Tracked>& v, std::size_t skip = SIZE_MAX) {
    std::vector<const Provenance*> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) out.push_back(&v[i].provenance);
    return out;
  };
  auto polys = [](const std::vector<Tracked>& v, std::size_t skip = SIZE_MAX) {
    std::vector<NcPoly> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) out.push_back(v[i].poly);
    return out;
  };

  while (!work.empty()) {
    std::size_t best = 0;
    Monomial best_lm = lm(work[0].poly, ord);
    for (std::size_t i = 1; i < work.size(); ++i) {
      Monomial m = lm(work[i].poly, ord);
      if (ord.greater(best_lm, m)) {
        best = i;
        best_lm = std::move(m);
      }
    }
    Tracked p = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));

    Reducer red(polys(result), ord);
    Tracked r = reduce_tracked(p, red, provenances(result), track);
    if (r.poly.is_zero()) continue;
    make_monic(r, ord, track);
    const Monomial r_lm = lm(r.poly, ord);
    const Quiver& q = r.poly.quiver();
    for (std::size_t i = result.size(); i-- > 0;) {
      if (!occurrences(q, r_lm, result_lm[i]).empty()) {
        work.push_back(std::move(result[i]));
        result.erase(result.begin() + static_cast<std::ptrdiff_t>(i));
        result_lm.erase(result_lm.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    result.push_back(std::move(r));
    result_lm.push_back(r_lm);
  }

  // Tail reduction; leading monomials are unaffected.
  for (std::size_t i = 0; i < result.size(); ++i) {
    Reducer red(polys(result, i), ord);
    result[i] = reduce_tracked(result[i], red, provenances(result, i), track);
  }

  std::vector<std::size_t> perm(result.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<Monomial> leads;
  for (const auto& t : result) leads.push_back(lm(t.poly, ord));
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (leads[a].degree() != leads[b].degree()) return leads[a].degree() < leads[b].degree();
    return ord.greater(leads[a], leads[b]);
  });
  std::vector<Tracked> sorted;
  for (std::size_t i : perm) sorted.push_back(std::move(result[i]));
  return sorted;
}

/// Reduced basis of the ideal spanned by G (G itself need not be Groebner).
inline std::vector<NcPoly> interreduce(const std::vector<NcPoly>& G, const OrderSpec& ord) {
  std::vector<Tracked> in;
  for (const auto& g : G) in.push_back({g, {}});
  std::vector<NcPoly> out;
  for (auto& t : interreduce_tracked(std::move(in), ord, false)) out.push_back(std::move(t.poly));
  return out;
}

}  // namespace ncpbw

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ncpbw/buchberger.hpp"
#include "ncpbw/subword_index.hpp"

namespace ncpbw {

namespace detail {
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("hilbert function value overflows 64 bits");
  return r;
}

inline void require_t_free(const std::vector<Monomial>& forbidden) {
  for (const auto& m : forbidden)
    if (m.tpow() != 0) throw Error("normal-word counting needs t-free leading monomials");
}
}  // namespace detail

/// Number of paths of each degree 0..bound containing none of `forbidden` as
/// a subpath. Dynamic programming over (automaton state, end vertex).
inline std::vector<std::uint64_t> count_normal_words(const Quiver::Ptr& algebra,
                                                     const std::vector<Monomial>& forbidden,
                                                     std::size_t bound) {
  detail::require_t_free(forbidden);
  const Quiver& q = *algebra;
  SubwordIndex index(algebra, forbidden);
  const auto blocked = index.blocked_vertices();

  std::vector<std::uint64_t> out(bound + 1, 0);
  // Layer of live (state, vertex) pairs with their path counts.
  std::map<std::pair<SubwordIndex::State, VertexId>, std::uint64_t> layer;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (!blocked[v]) layer[{0, v}] = 1;
  for (std::size_t d = 0;; ++d) {
    for (const auto& [key, n] : layer) out[d] = detail::checked_add(out[d], n);
    if (d == bound) break;
    std::map<std::pair<SubwordIndex::State, VertexId>, std::uint64_t> next;
    for (const auto& [key, n] : layer) {
      const auto [state, vertex] = key;
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arrow = q.arrow(a);
        if (arrow.source != vertex || blocked[arrow.target]) continue;
        const auto s = index.next(state, a);
        if (index.is_match(s)) continue;
        auto& slot = next[{s, arrow.target}];
        slot = detail::checked_add(slot, n);
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Reference count by enumerating every path and scanning for subpaths.
inline std::vector<std::uint64_t> count_normal_words_naive(const Quiver::Ptr& algebra,
                                                           const std::vector<Monomial>& forbidden,
                                                           std::size_t bound) {
  detail::require_t_free(forbidden);
  const Quiver& q = *algebra;
  std::vector<std::uint64_t> out(bound + 1, 0);
  auto normal = [&](const Monomial& m) {
    for (const auto& p : forbidden)
      if (!occurrences(q, p, m).empty()) return false;
    return true;
  };
  std::vector<Monomial> layer;
  for (VertexId v = 0; v < q.vertex_count(); ++v) layer.push_back(Monomial::idempotent(v));
  for (std::size_t d = 0; d <= bound; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      if (!normal(m)) continue;
      ++out[d];
      if (d == bound) continue;
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        if (auto ma = q.product(m, Monomial::path({a}))) next.push_back(std::move(*ma));
    }
    layer = std::move(next);
  }
  return out;
}

/// Normal-word counts of R/<LM(G)> by degree; the Hilbert function of the
/// associated graded algebra when G is complete.
inline std::vector<std::uint64_t> hilbert_function(const TruncatedGB& G, std::size_t bound) {
  std::vector<Monomial> leads;
  for (const auto& g : G.elements) leads.push_back(lm(g, G.order));
  return count_normal_words(G.order.algebra(), leads, bound);
}

}  // namespace ncpbw

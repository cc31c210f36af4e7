#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace ncpbw {

using ArrowId = std::uint32_t;
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// A basis element of R or R[t]: a path (word of arrows) times a power of the
/// central variable t. A path of length zero is a vertex idempotent and
/// carries its vertex; nonempty paths carry kNoVertex so that equality is
/// plain structural equality.
///
/// Monomials do not know their quiver. Composability and range checks are
/// done by Quiver, which is also the only place products are formed.
class Monomial {
 public:
  static Monomial idempotent(VertexId vertex, std::uint32_t tpow = 0) {
    Monomial m;
    m.vertex_ = vertex;
    m.tpow_ = tpow;
    return m;
  }

  /// Nonempty word; composability is the caller's (Quiver's) business.
  static Monomial path(std::vector<ArrowId> word, std::uint32_t tpow = 0) {
    Monomial m;
    m.word_ = std::move(word);
    m.tpow_ = tpow;
    return m;
  }

  const std::vector<ArrowId>& word() const noexcept { return word_; }
  bool is_idempotent() const noexcept { return word_.empty(); }
  VertexId vertex() const noexcept { return vertex_; }
  std::uint32_t tpow() const noexcept { return tpow_; }
  std::size_t length() const noexcept { return word_.size(); }

  /// Degree in the mixed gradation: path length plus power of t.
  std::size_t degree() const noexcept { return word_.size() + tpow_; }

  Monomial with_tpow(std::uint32_t tpow) const {
    Monomial m = *this;
    m.tpow_ = tpow;
    return m;
  }
  Monomial word_part() const { return with_tpow(0); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Structural order used for storage: length, then arrow ids, then vertex,
  /// then t-power. Not a monomial ordering in the algebraic sense.
  friend std::strong_ordering structural_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(),
                                                        b.word_.begin(), b.word_.end());
        c != 0)
      return c;
    if (auto c = a.vertex_ <=> b.vertex_; c != 0) return c;
    return a.tpow_ <=> b.tpow_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}((std::uint64_t{vertex_} << 32) | tpow_);
    for (ArrowId a : word_) h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  Monomial() = default;

  std::vector<ArrowId> word_;
  VertexId vertex_ = kNoVertex;
  std::uint32_t tpow_ = 0;
};

struct StructuralLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return structural_compare(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace ncpbw

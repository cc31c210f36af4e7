#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncpbw/errors.hpp"
#include "ncpbw/monomial.hpp"

namespace ncpbw {

enum class AlgebraKind { free, path };

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// The ground ring R = KQ with its path-length grading. A free algebra is the
/// one-vertex quiver with one loop per generator.
class Quiver {
 public:
  using Ptr = std::shared_ptr<const Quiver>;

  static Ptr make_free(std::vector<std::string> generators) {
    std::vector<Arrow> arrows;
    arrows.reserve(generators.size());
    for (auto& g : generators) arrows.push_back({std::move(g), 0, 0});
    return Ptr(new Quiver(AlgebraKind::free, {"*"}, std::move(arrows)));
  }

  static Ptr make_path(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
    return Ptr(new Quiver(AlgebraKind::path, std::move(vertices), std::move(arrows)));
  }

  AlgebraKind kind() const noexcept { return kind_; }
  bool is_free() const noexcept { return kind_ == AlgebraKind::free; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

  std::optional<ArrowId> find_arrow(std::string_view name) const {
    for (ArrowId a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].name == name) return a;
    return std::nullopt;
  }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    for (VertexId v = 0; v < vertices_.size(); ++v)
      if (vertices_[v] == name) return v;
    return std::nullopt;
  }

  VertexId source(const Monomial& m) const {
    return m.is_idempotent() ? m.vertex() : arrows_[m.word().front()].source;
  }
  VertexId target(const Monomial& m) const {
    return m.is_idempotent() ? m.vertex() : arrows_[m.word().back()].target;
  }

  /// Vertex visited at position k of the path (0 = source, length = target).
  VertexId vertex_at(const Monomial& m, std::size_t k) const {
    if (m.is_idempotent()) return m.vertex();
    return k == 0 ? arrows_[m.word().front()].source : arrows_[m.word()[k - 1]].target;
  }

  bool is_valid(const Monomial& m) const {
    if (m.is_idempotent()) return m.vertex() < vertices_.size();
    if (m.vertex() != kNoVertex) return false;
    const auto& w = m.word();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= arrows_.size()) return false;
      if (i > 0 && arrows_[w[i - 1]].target != arrows_[w[i]].source) return false;
    }
    return true;
  }

  void check(const Monomial& m) const {
    if (!is_valid(m)) throw AlgebraMismatch("monomial is not a valid path of this quiver");
  }

  /// Unit monomial of a free algebra.
  Monomial unit(std::uint32_t tpow = 0) const {
    if (!is_free()) throw Error("path algebra has no unit monomial; use the idempotents");
    return Monomial::idempotent(0, tpow);
  }

  Monomial idempotent(VertexId v, std::uint32_t tpow = 0) const {
    if (v >= vertices_.size()) throw AlgebraMismatch("vertex id out of range");
    return Monomial::idempotent(v, tpow);
  }

  Monomial generator(ArrowId a) const {
    if (a >= arrows_.size()) throw AlgebraMismatch("arrow id out of range");
    return Monomial::path({a});
  }

  /// Builds a path; an empty word is not accepted here (use idempotent()).
  /// Returns nullopt for non-composable sequences.
  std::optional<Monomial> path(std::vector<ArrowId> word, std::uint32_t tpow = 0) const {
    if (word.empty()) throw InvalidMonomial("empty word; use idempotent() or unit()");
    auto m = Monomial::path(std::move(word), tpow);
    for (ArrowId a : m.word())
      if (a >= arrows_.size()) throw AlgebraMismatch("arrow id out of range");
    if (!is_valid(m)) return std::nullopt;
    return m;
  }

  /// Same as path() but by arrow names; throws on unknown names.
  std::optional<Monomial> path(std::initializer_list<std::string_view> names,
                               std::uint32_t tpow = 0) const {
    std::vector<ArrowId> w;
    for (auto n : names) {
      auto a = find_arrow(n);
      if (!a) throw AlgebraMismatch("unknown arrow '" + std::string(n) + "'");
      w.push_back(*a);
    }
    return path(std::move(w), tpow);
  }

  /// Product in KQ[t]: concatenation when target(u) = source(v), t-powers
  /// added; nullopt is the zero product of non-composable paths.
  std::optional<Monomial> multiply(const Monomial& u, const Monomial& v) const {
    check(u);
    check(v);
    return product(u, v);
  }

  /// multiply() without validating the operands.
  std::optional<Monomial> product(const Monomial& u, const Monomial& v) const {
    if (target(u) != source(v)) return std::nullopt;
    const std::uint32_t tpow = u.tpow() + v.tpow();
    if (u.is_idempotent()) return v.with_tpow(tpow);
    if (v.is_idempotent()) return u.with_tpow(tpow);
    std::vector<ArrowId> w;
    w.reserve(u.length() + v.length());
    w.insert(w.end(), u.word().begin(), u.word().end());
    w.insert(w.end(), v.word().begin(), v.word().end());
    return Monomial::path(std::move(w), tpow);
  }

  /// Subpath of length len starting at position pos; len = 0 yields the
  /// idempotent at that position.
  Monomial subpath(const Monomial& m, std::size_t pos, std::size_t len) const {
    if (len == 0) return Monomial::idempotent(vertex_at(m, pos));
    return Monomial::path({m.word().begin() + static_cast<std::ptrdiff_t>(pos),
                           m.word().begin() + static_cast<std::ptrdiff_t>(pos + len)});
  }

  /// "x*y*t*t", "e1", "1" (free unit), "t*t" (free unit times t^2).
  std::string render(const Monomial& m) const {
    std::string out;
    if (m.is_idempotent()) {
      if (!is_free()) out = "e" + vertices_[m.vertex()];
    } else {
      for (std::size_t i = 0; i < m.length(); ++i) {
        if (i) out += '*';
        out += arrows_[m.word()[i]].name;
      }
    }
    for (std::uint32_t i = 0; i < m.tpow(); ++i) {
      if (!out.empty()) out += '*';
      out += 't';
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.kind_ == b.kind_ && a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  Quiver(AlgebraKind kind, std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : kind_(kind), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    if (vertices_.empty()) throw Error("quiver needs at least one vertex");
    if (kind_ == AlgebraKind::free && vertices_.size() != 1)
      throw Error("free algebra must have exactly one vertex");
    std::set<std::string_view> seen;
    for (const auto& a : arrows_) {
      if (a.name.empty()) throw Error("empty arrow name");
      if (!seen.insert(a.name).second) throw Error("duplicate arrow name '" + a.name + "'");
      if (a.source >= vertices_.size() || a.target >= vertices_.size())
        throw Error("arrow '" + a.name + "' references a missing vertex");
    }
    std::set<std::string_view> vseen;
    for (const auto& v : vertices_)
      if (!vseen.insert(v).second) throw Error("duplicate vertex '" + v + "'");
  }

  AlgebraKind kind_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

inline bool same_algebra(const Quiver::Ptr& a, const Quiver::Ptr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_algebra(const Quiver::Ptr& a, const Quiver::Ptr& b) {
  if (!same_algebra(a, b)) throw AlgebraMismatch("operands belong to different algebras");
}

}  // namespace ncpbw

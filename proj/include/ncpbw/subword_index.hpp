#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "ncpbw/monomial.hpp"
#include "ncpbw/quiver.hpp"

namespace ncpbw {

/// Where a pattern monomial occurs inside a monomial: m = left * pattern *
/// right with left a path of length `position`.
struct Occurrence {
  std::size_t pattern;
  std::size_t position;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Does pattern p divide m at position pos? Words must match as a subpath;
/// an idempotent pattern matches where the path visits its vertex; the
/// t-power of p must not exceed that of m.
inline bool divides_at(const Quiver& q, const Monomial& p, const Monomial& m, std::size_t pos) {
  if (p.tpow() > m.tpow()) return false;
  if (p.is_idempotent()) return pos <= m.length() && q.vertex_at(m, pos) == p.vertex();
  if (pos + p.length() > m.length()) return false;
  for (std::size_t i = 0; i < p.length(); ++i)
    if (m.word()[pos + i] != p.word()[i]) return false;
  return true;
}

/// Reference matcher: lowest pattern index first, then leftmost position.
inline std::optional<Occurrence> naive_first_divisor(const Quiver& q, const std::vector<Monomial>& patterns,
                                                     const Monomial& m) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& p = patterns[i];
    if (p.length() > m.length()) continue;
    for (std::size_t pos = 0; pos + p.length() <= m.length(); ++pos)
      if (divides_at(q, p, m, pos)) return Occurrence{i, pos};
  }
  return std::nullopt;
}

/// All positions at which p divides m, left to right.
inline std::vector<std::size_t> occurrences(const Quiver& q, const Monomial& p, const Monomial& m) {
  std::vector<std::size_t> out;
  if (p.length() > m.length()) return out;
  for (std::size_t pos = 0; pos + p.length() <= m.length(); ++pos)
    if (divides_at(q, p, m, pos)) out.push_back(pos);
  return out;
}

/// Aho-Corasick automaton over the arrow alphabet for a growing list of
/// pattern monomials. Idempotent patterns are kept beside the automaton since
/// they match vertices, not letters.
class SubwordIndex {
 public:
  using State = std::uint32_t;

  explicit SubwordIndex(Quiver::Ptr algebra) : algebra_(std::move(algebra)) { rebuild(); }

  SubwordIndex(Quiver::Ptr algebra, const std::vector<Monomial>& patterns)
      : algebra_(std::move(algebra)) {
    for (const auto& p : patterns) add_pattern(p);
    rebuild();
  }

  void add(const Monomial& pattern) {
    add_pattern(pattern);
    rebuild();
  }

  const std::vector<Monomial>& patterns() const noexcept { return patterns_; }

  std::optional<Occurrence> first_divisor(const Monomial& m) const {
    const Quiver& q = *algebra_;
    std::optional<Occurrence> best;
    auto consider = [&](std::size_t pattern, std::size_t pos) {
      if (!best || pattern < best->pattern || (pattern == best->pattern && pos < best->position))
        best = Occurrence{pattern, pos};
    };
    for (std::size_t idx : vertex_patterns_) {
      const auto& p = patterns_[idx];
      if (p.tpow() > m.tpow()) continue;
      if (best && best->pattern < idx) break;
      for (std::size_t pos = 0; pos <= m.length(); ++pos) {
        if (q.vertex_at(m, pos) == p.vertex()) {
          consider(idx, pos);
          break;
        }
      }
    }
    State s = 0;
    for (std::size_t i = 0; i < m.length(); ++i) {
      s = delta_[s * alphabet_ + m.word()[i]];
      for (State o = has_output(s) ? s : dict_[s]; o != kNone; o = dict_[o]) {
        for (std::size_t idx : output_[o]) {
          const auto& p = patterns_[idx];
          if (p.tpow() > m.tpow()) continue;
          consider(idx, i + 1 - p.length());
        }
      }
    }
    return best;
  }

  // Automaton access for counting normal words.
  std::size_t state_count() const noexcept { return output_.size(); }
  State next(State s, ArrowId a) const { return delta_[s * alphabet_ + a]; }
  /// Some word pattern ends at this state (t-powers ignored).
  bool is_match(State s) const { return has_output(s) || dict_[s] != kNone; }
  /// Vertices whose idempotent is one of the patterns (t-powers ignored).
  std::vector<bool> blocked_vertices() const {
    std::vector<bool> out(algebra_->vertex_count(), false);
    for (std::size_t idx : vertex_patterns_) out[patterns_[idx].vertex()] = true;
    return out;
  }

 private:
  static constexpr State kNone = std::numeric_limits<State>::max();

  bool has_output(State s) const { return !output_[s].empty(); }

  void add_pattern(const Monomial& p) {
    algebra_->check(p);
    patterns_.push_back(p);
  }

  void rebuild() {
    alphabet_ = std::max<std::size_t>(algebra_->arrow_count(), 1);
    vertex_patterns_.clear();
    // Trie.
    std::vector<std::vector<State>> child(1, std::vector<State>(alphabet_, kNone));
    output_.assign(1, {});
    for (std::size_t idx = 0; idx < patterns_.size(); ++idx) {
      const auto& p = patterns_[idx];
      if (p.is_idempotent()) {
        vertex_patterns_.push_back(idx);
        continue;
      }
      State s = 0;
      for (ArrowId a : p.word()) {
        if (child[s][a] == kNone) {
          child[s][a] = static_cast<State>(child.size());
          child.emplace_back(alphabet_, kNone);
          output_.emplace_back();
        }
        s = child[s][a];
      }
      output_[s].push_back(idx);
    }
    // Failure and dictionary links, breadth first.
    const std::size_t n = child.size();
    std::vector<State> fail(n, 0);
    dict_.assign(n, kNone);
    delta_.assign(n * alphabet_, 0);
    std::deque<State> queue;
    for (std::size_t a = 0; a < alphabet_; ++a) {
      State c = child[0][a];
      if (c == kNone) {
        delta_[a] = 0;
      } else {
        delta_[a] = c;
        fail[c] = 0;
        queue.push_back(c);
      }
    }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      const State f = fail[s];
      dict_[s] = has_output(f) ? f : dict_[f];
      for (std::size_t a = 0; a < alphabet_; ++a) {
        State c = child[s][a];
        if (c == kNone) {
          delta_[s * alphabet_ + a] = delta_[f * alphabet_ + a];
        } else {
          delta_[s * alphabet_ + a] = c;
          fail[c] = delta_[f * alphabet_ + a];
          queue.push_back(c);
        }
      }
    }
  }

  Quiver::Ptr algebra_;
  std::vector<Monomial> patterns_;
  std::vector<std::size_t> vertex_patterns_;
  std::size_t alphabet_ = 1;
  std::vector<State> delta_;
  std::vector<State> dict_;
  std::vector<std::vector<std::size_t>> output_;
};

}  // namespace ncpbw

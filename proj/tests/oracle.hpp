#pragma once

// Brute-force quotient dimensions by exact row reduction. Deliberately shares
// nothing with the library beyond the quiver's arrow table and the term map of
// a polynomial: paths, concatenation and elimination are all local.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ncpbw/poly.hpp"

namespace oracle {

struct Path {
  std::vector<std::uint32_t> arrows;
  std::uint32_t start;  // vertex of an empty path
  bool operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows != o.arrows) return arrows < o.arrows;
    return start < o.start;
  }
};

class Oracle {
 public:
  Oracle(const ncpbw::Quiver& q, std::size_t max_degree) : q_(q), max_(max_degree) {
    for (std::uint32_t v = 0; v < q.vertex_count(); ++v) add({{}, v});
    for (std::size_t d = 1; d <= max_; ++d) {
      const std::size_t n = paths_.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (paths_[i].arrows.size() != d - 1) continue;
        for (std::uint32_t a = 0; a < q.arrow_count(); ++a) {
          if (q.arrow(a).source != end(paths_[i])) continue;
          Path p = paths_[i];
          p.arrows.push_back(a);
          add(p);
        }
      }
    }
  }

  std::size_t path_count() const { return paths_.size(); }

  /// Adds every u*f*v of degree at most the maximum to the span.
  void add_relation(const ncpbw::NcPoly& f) {
    std::vector<std::pair<Path, mpq_class>> terms;
    std::size_t deg = 0;
    for (const auto& [m, c] : f.terms()) {
      if (m.tpow() != 0) throw std::logic_error("oracle works in R only");
      Path p{m.word(), m.is_idempotent() ? m.vertex() : q_.arrow(m.word().front()).source};
      deg = std::max(deg, p.arrows.size());
      terms.emplace_back(std::move(p), c);
    }
    for (const auto& u : paths_) {
      if (u.arrows.size() + deg > max_) continue;
      for (const auto& v : paths_) {
        if (u.arrows.size() + deg + v.arrows.size() > max_) continue;
        std::map<std::size_t, mpq_class> row;
        for (const auto& [m, c] : terms) {
          if (end(u) != m.start || end(m) != v.start) continue;
          Path w{u.arrows, u.start};
          w.arrows.insert(w.arrows.end(), m.arrows.begin(), m.arrows.end());
          w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
          row[index_.at(w)] += c;
        }
        insert(std::move(row));
      }
    }
  }

  /// Whether f lies in the span of the products added so far.
  bool contains(const ncpbw::NcPoly& f) const {
    std::map<std::size_t, mpq_class> row;
    for (const auto& [m, c] : f.terms()) {
      if (m.tpow() != 0) throw std::logic_error("oracle works in R only");
      Path p{m.word(), m.is_idempotent() ? m.vertex() : q_.arrow(m.word().front()).source};
      auto it = index_.find(p);
      if (it == index_.end()) return false;
      row[it->second] += c;
    }
    for (auto it = row.begin(); it != row.end();) it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
    while (!row.empty()) {
      auto top = std::prev(row.end());
      auto hit = pivots_.find(top->first);
      if (hit == pivots_.end()) return false;
      const mpq_class factor = top->second / std::prev(hit->second.end())->second;
      for (const auto& [col, c] : hit->second) {
        auto& slot = row[col];
        slot -= factor * c;
        if (sgn(slot) == 0) row.erase(col);
      }
    }
    return true;
  }

  /// dim F_d(R/I) for d = 0..max, counting I by the spanned products only.
  std::vector<std::uint64_t> filtered_dimensions() const {
    std::vector<std::uint64_t> out(max_ + 1, 0);
    for (std::size_t d = 0; d <= max_; ++d) {
      std::uint64_t words = 0, pivots = 0;
      for (const auto& p : paths_) words += p.arrows.size() <= d;
      for (const auto& [col, row] : pivots_) pivots += paths_[col].arrows.size() <= d;
      out[d] = words - pivots;
    }
    return out;
  }

  /// Dimensions of the associated graded pieces F_d / F_{d-1}.
  std::vector<std::uint64_t> graded_dimensions() const {
    auto f = filtered_dimensions();
    std::vector<std::uint64_t> out(f.size());
    for (std::size_t d = 0; d < f.size(); ++d) out[d] = f[d] - (d ? f[d - 1] : 0);
    return out;
  }

 private:
  std::uint32_t end(const Path& p) const { return p.arrows.empty() ? p.start : q_.arrow(p.arrows.back()).target; }

  void add(const Path& p) {
    index_.emplace(p, paths_.size());
    paths_.push_back(p);
  }

  // Columns are numbered by degree, so the last entry of a row is one of its
  // highest-degree words. Rows are kept with distinct pivots.
  void insert(std::map<std::size_t, mpq_class> row) {
    for (auto it = row.begin(); it != row.end();) it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
    while (!row.empty()) {
      auto top = std::prev(row.end());
      auto hit = pivots_.find(top->first);
      if (hit == pivots_.end()) {
        pivots_.emplace(top->first, std::move(row));
        return;
      }
      const mpq_class factor = top->second / std::prev(hit->second.end())->second;
      for (const auto& [col, c] : hit->second) {
        auto& slot = row[col];
        slot -= factor * c;
        if (sgn(slot) == 0) row.erase(col);
      }
    }
  }

  const ncpbw::Quiver& q_;
  std::size_t max_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
  std::map<std::size_t, std::map<std::size_t, mpq_class>> pivots_;
};

/// Graded dimensions of R/<F> in degrees 0..degree, spanning products up to
/// degree + slack.
inline std::vector<std::uint64_t> graded_dimensions(const ncpbw::Quiver& q, const std::vector<ncpbw::NcPoly>& F,
                                                    std::size_t degree, std::size_t slack) {
  Oracle o(q, degree + slack);
  for (const auto& f : F) o.add_relation(f);
  auto dims = o.graded_dimensions();
  dims.resize(degree + 1);
  return dims;
}

}  // namespace oracle

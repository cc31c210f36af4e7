#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ncpbw/errors.hpp"
#include "ncpbw/poly.hpp"
#include "ncpbw/quiver.hpp"

namespace ncpbw {

enum class OrderScheme { deglex };

/// Graded lexicographic ordering on paths. Precedence lists arrow names from
/// largest to smallest; vertex idempotents compare by declaration order
/// (earlier vertex is larger). On R[t] the ordering compares word parts
/// first and falls back to the t-power.
class OrderSpec {
 public:
  /// Precedence in declaration order.
  explicit OrderSpec(Quiver::Ptr algebra) : algebra_(std::move(algebra)) {
    std::vector<std::string> names;
    for (const auto& a : algebra_->arrows()) names.push_back(a.name);
    init(std::move(names));
  }

  OrderSpec(Quiver::Ptr algebra, std::vector<std::string> precedence)
      : algebra_(std::move(algebra)) {
    init(std::move(precedence));
  }

  const Quiver::Ptr& algebra() const noexcept { return algebra_; }
  OrderScheme scheme() const noexcept { return OrderScheme::deglex; }
  const std::vector<std::string>& precedence() const noexcept { return precedence_; }

  /// Ordering on B (t-free monomials).
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
    if (u.tpow() != 0 || v.tpow() != 0)
      throw Error("compare: monomials with a t-power need compare_ext");
    return compare_words(u, v);
  }

  /// Extension to B(t): w1 t^r1 > w2 t^r2 iff w1 > w2, or w1 = w2 and r1 > r2.
  std::strong_ordering compare_ext(const Monomial& u, const Monomial& v) const {
    if (auto c = compare_words(u, v); c != 0) return c;
    return u.tpow() <=> v.tpow();
  }

  bool greater(const Monomial& u, const Monomial& v) const { return compare_ext(u, v) > 0; }

  friend bool operator==(const OrderSpec& a, const OrderSpec& b) {
    return same_algebra(a.algebra_, b.algebra_) && a.precedence_ == b.precedence_;
  }

 private:
  void init(std::vector<std::string> precedence) {
    const Quiver& q = *algebra_;
    if (precedence.size() != q.arrow_count())
      throw Error("precedence must list every generator exactly once");
    rank_.assign(q.arrow_count(), 0);
    std::vector<bool> seen(q.arrow_count(), false);
    for (std::size_t i = 0; i < precedence.size(); ++i) {
      auto a = q.find_arrow(precedence[i]);
      if (!a) throw Error("precedence names unknown generator '" + precedence[i] + "'");
      if (seen[*a]) throw Error("precedence lists '" + precedence[i] + "' twice");
      seen[*a] = true;
      rank_[*a] = static_cast<std::uint32_t>(i);
    }
    precedence_ = std::move(precedence);
  }

  // Ranks are "smaller is larger in the order".
  std::strong_ordering compare_words(const Monomial& u, const Monomial& v) const {
    if (auto c = u.length() <=> v.length(); c != 0) return c;
    const auto range = [this](ArrowId a) {
      if (a >= rank_.size()) throw AlgebraMismatch("arrow id out of range for this ordering");
      return rank_[a];
    };
    if (u.is_idempotent()) {
      if (u.vertex() >= algebra_->vertex_count() || v.vertex() >= algebra_->vertex_count())
        throw AlgebraMismatch("vertex id out of range for this ordering");
      return v.vertex() <=> u.vertex();
    }
    for (std::size_t i = 0; i < u.length(); ++i) {
      const auto ru = range(u.word()[i]);
      const auto rv = range(v.word()[i]);
      if (ru != rv) return rv <=> ru;
    }
    return std::strong_ordering::equal;
  }

  Quiver::Ptr algebra_;
  std::vector<std::string> precedence_;
  std::vector<std::uint32_t> rank_;
};

/// Map comparator: iterates from the largest monomial down.
struct DescendingBy {
  const OrderSpec* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

inline const std::pair<const Monomial, Scalar>& leading_term(const NcPoly& f, const OrderSpec& ord) {
  if (f.is_zero()) throw ZeroPolynomial("lm");
  require_same_algebra(f.algebra(), ord.algebra());
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return *best;
}

inline Monomial lm(const NcPoly& f, const OrderSpec& ord) { return leading_term(f, ord).first; }
inline Scalar lc(const NcPoly& f, const OrderSpec& ord) { return leading_term(f, ord).second; }

inline NcPoly make_monic(NcPoly f, const OrderSpec& ord) {
  if (f.is_zero()) return f;
  Scalar inv = 1 / lc(f, ord);
  f *= inv;
  return f;
}

/// Terms of f from the largest monomial down.
inline std::vector<std::pair<Monomial, Scalar>> sorted_terms(const NcPoly& f, const OrderSpec& ord) {
  std::vector<std::pair<Monomial, Scalar>> out(f.terms().begin(), f.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  return out;
}

/// Canonical text form, e.g. "x*y - y*x - 1" or "1/2*a*b - e1".
inline std::string render(const NcPoly& f, const OrderSpec& ord) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(f, ord)) {
    const bool negative = sgn(c) < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool bare = m.is_idempotent() && m.tpow() == 0 && f.quiver().is_free();
    if (bare) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += f.quiver().render(m);
    }
  }
  return out;
}

}  // namespace ncpbw

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncpbw/errors.hpp"
#include "ncpbw/monomial.hpp"
#include "ncpbw/quiver.hpp"
#include "ncpbw/scalar.hpp"

namespace ncpbw {

/// Element of R = KQ or of R[t]: a finite map from monomials to nonzero
/// rationals. The zero polynomial is the empty map. Every polynomial knows
/// its algebra; arithmetic across algebras throws AlgebraMismatch.
class NcPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, StructuralLess>;

  explicit NcPoly(Quiver::Ptr algebra) : algebra_(std::move(algebra)) {
    if (!algebra_) throw Error("polynomial without an algebra");
  }

  NcPoly(Quiver::Ptr algebra, const Monomial& m, const Scalar& c = 1) : NcPoly(std::move(algebra)) {
    add_term(m, c);
  }

  /// c times the unit of R (the sum of all vertex idempotents), times t^tpow.
  static NcPoly constant(const Quiver::Ptr& algebra, const Scalar& c, std::uint32_t tpow = 0) {
    NcPoly p(algebra);
    for (VertexId v = 0; v < algebra->vertex_count(); ++v)
      p.add_term(Monomial::idempotent(v, tpow), c);
    return p;
  }

  static NcPoly one(const Quiver::Ptr& algebra) { return constant(algebra, 1); }

  /// The central variable t (= sum over vertices of e_v t).
  static NcPoly t(const Quiver::Ptr& algebra) { return constant(algebra, 1, 1); }

  const Quiver::Ptr& algebra() const noexcept { return algebra_; }
  const Quiver& quiver() const noexcept { return *algebra_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool has_t() const {
    for (const auto& [m, c] : terms_)
      if (m.tpow() > 0) return true;
    return false;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    algebra_->check(m);
    add_term_unchecked(m, c);
  }

  /// For callers that already know m is a valid path of this algebra.
  void add_term_unchecked(const Monomial& m, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  NcPoly& operator+=(const NcPoly& g) {
    require_same_algebra(algebra_, g.algebra_);
    for (const auto& [m, c] : g.terms_) add_term_unchecked(m, c);
    return *this;
  }

  NcPoly& operator-=(const NcPoly& g) {
    require_same_algebra(algebra_, g.algebra_);
    for (const auto& [m, c] : g.terms_) add_term_unchecked(m, -c);
    return *this;
  }

  NcPoly& operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
  }

  friend NcPoly operator+(NcPoly f, const NcPoly& g) { return f += g; }
  friend NcPoly operator-(NcPoly f, const NcPoly& g) { return f -= g; }
  friend NcPoly operator-(NcPoly f) { return f *= Scalar(-1); }
  friend NcPoly operator*(const Scalar& c, NcPoly f) { return f *= c; }
  friend NcPoly operator*(NcPoly f, const Scalar& c) { return f *= c; }

  friend NcPoly operator*(const NcPoly& f, const NcPoly& g) {
    require_same_algebra(f.algebra_, g.algebra_);
    NcPoly out(f.algebra_);
    const Quiver& q = *f.algebra_;
    for (const auto& [u, a] : f.terms_)
      for (const auto& [v, b] : g.terms_)
        if (auto uv = q.product(u, v)) out.add_term_unchecked(*uv, a * b);
    return out;
  }

  /// c * left * this * right, accumulated into out. Monomials must be valid.
  void accumulate_sandwich(NcPoly& out, const Scalar& c, const Monomial& left,
                           const Monomial& right) const {
    const Quiver& q = *algebra_;
    for (const auto& [m, a] : terms_) {
      auto lm = q.product(left, m);
      if (!lm) continue;
      auto lmr = q.product(*lm, right);
      if (!lmr) continue;
      out.add_term_unchecked(*lmr, c * a);
    }
  }

  NcPoly sandwich(const Monomial& left, const Monomial& right, const Scalar& c = 1) const {
    algebra_->check(left);
    algebra_->check(right);
    NcPoly out(algebra_);
    accumulate_sandwich(out, c, left, right);
    return out;
  }

  friend bool operator==(const NcPoly& f, const NcPoly& g) {
    return same_algebra(f.algebra_, g.algebra_) && f.terms_ == g.terms_;
  }

 private:
  Quiver::Ptr algebra_;
  TermMap terms_;
};

/// Degree in the (mixed) grading: largest word length + t-power.
inline std::size_t degree(const NcPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("degree");
  std::size_t d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.degree());
  return d;
}

/// Smallest degree of a term; used to decide homogeneity.
inline std::size_t low_degree(const NcPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("low_degree");
  std::size_t d = f.terms().begin()->first.degree();
  for (const auto& [m, c] : f.terms()) d = std::min(d, m.degree());
  return d;
}

inline bool is_homogeneous(const NcPoly& f) { return f.is_zero() || degree(f) == low_degree(f); }

/// Component of f in degree d (possibly zero).
inline NcPoly homogeneous_part(const NcPoly& f, std::size_t d) {
  NcPoly out(f.algebra());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) out.add_term_unchecked(m, c);
  return out;
}

/// Leading homogeneous part: the top-degree slice of f.
inline NcPoly lh(const NcPoly& f) { return homogeneous_part(f, degree(f)); }

/// An ideal given by generators over a fixed algebra.
struct IdealPresentation {
  Quiver::Ptr algebra;
  std::vector<NcPoly> generators;

  IdealPresentation(Quiver::Ptr alg, std::vector<NcPoly> gens)
      : algebra(std::move(alg)), generators(std::move(gens)) {
    if (generators.empty()) throw Error("ideal presentation needs at least one generator");
    for (const auto& g : generators) {
      require_same_algebra(algebra, g.algebra());
      if (g.is_zero()) throw Error("ideal presentation contains the zero polynomial");
    }
  }
};

}  // namespace ncpbw

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "minorhopf/matroid.hpp"
#include "minorhopf/rational.hpp"
#include "minorhopf/weak_order.hpp"

namespace minorhopf {

/// A finite linear combination of labeled matroids with exact rational
/// coefficients. Zero coefficients are never stored. Term keys are
/// normalized to sorted-label ground order so that equal labeled matroids
/// always merge; iteration order (ground labels, then encoded basis
/// family) is the display and serialization order.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(const Matroid& m) { add(m, 1); }

  void add(const Matroid& m, const Rational& coefficient);

  const std::map<Matroid, Rational>& terms() const { return terms_; }
  Rational coefficient(const Matroid& m) const;
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  FormalSum& operator*=(const Rational& scalar);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Rational& s, FormalSum a) { return a *= s; }

  bool operator==(const FormalSum&) const = default;

 private:
  std::map<Matroid, Rational> terms_;
};

/// Element of C ⊗ C: ordered pairs of matroids with rational coefficients,
/// the two grounds within one term disjoint. Not symmetrized.
class TensorSum {
 public:
  using Key = std::pair<Matroid, Matroid>;

  void add(const Matroid& left, const Matroid& right,
           const Rational& coefficient);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorSum& operator+=(const TensorSum& other);
  TensorSum& operator-=(const TensorSum& other);

  bool operator==(const TensorSum&) const = default;

 private:
  std::map<Key, Rational> terms_;
};

/// δ(M) = Σ_{A ⊆ S} M|A ⊗ M/A, multiplicities merged.
TensorSum coproduct(const Matroid& m);
TensorSum coproduct(const FormalSum& x);

/// ε: coefficient of the empty matroid.
Rational counit(const FormalSum& x);

/// δ̄(x) with δ(x) = 1⊗x + x⊗1 + δ̄(x). Requires counit(x) = 0
/// (Errc::NonzeroCounit). x is primitive iff the result is zero.
TensorSum reduced_coproduct(const FormalSum& x);

/// The product of C*: Σ of every L in [P⊕Q, P□Q] when the grounds are
/// disjoint, the zero sum otherwise.
FormalSum dual_product(const Matroid& p, const Matroid& q);
FormalSum dual_product(const FormalSum& x, const FormalSum& y);

/// Kronecker pairing ⟨x, y⟩ extended bilinearly.
Rational pairing(const FormalSum& x, const FormalSum& y);
Rational pairing(const TensorSum& x, const TensorSum& y);

/// counit(x) = 0 and reduced_coproduct(x) = 0. This is the decision
/// procedure; the perp characterization is a verification path only.
bool is_primitive(const FormalSum& x);

/// π_S: terms whose ground label set equals that of `grade`.
FormalSum project_grade(const FormalSum& x, const GroundSet& grade);

/// w_M = Σ_{N ∈ W_M} μ_W(M,N) N. Capped at kMaxEnumerationSize.
FormalSum w_basis(const Matroid& m);

/// r_M = Σ_{N ∈ R_M} μ_R(M,N) N; primitive whenever M is irreducible.
FormalSum r_basis(const Matroid& m);

/// Dimension of the primitive space in grade S, computed as
/// |W_S| - rank{P·Q : U+V=S nonempty}. Capped at |S| ≤ 4.
int primitive_dimension(const GroundSet& ground);

}  // namespace minorhopf

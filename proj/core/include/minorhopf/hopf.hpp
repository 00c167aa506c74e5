#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minorhopf/coalgebra.hpp"
#include "minorhopf/matroid.hpp"
#include "minorhopf/rational.hpp"

namespace minorhopf {

/// A linear combination of isomorphism classes: an element of H.
class IsoSum {
 public:
  IsoSum() = default;
  explicit IsoSum(const IsoClass& c) { add(c, 1); }

  void add(const IsoClass& c, const Rational& coefficient);

  const std::map<IsoClass, Rational>& terms() const { return terms_; }
  Rational coefficient(const IsoClass& c) const;
  bool is_zero() const { return terms_.empty(); }

  IsoSum& operator+=(const IsoSum& other);
  IsoSum& operator-=(const IsoSum& other);
  IsoSum& operator*=(const Rational& scalar);
  friend IsoSum operator+(IsoSum a, const IsoSum& b) { return a += b; }
  friend IsoSum operator-(IsoSum a, const IsoSum& b) { return a -= b; }
  friend IsoSum operator*(const Rational& s, IsoSum a) { return a *= s; }

  bool operator==(const IsoSum&) const = default;

 private:
  std::map<IsoClass, Rational> terms_;
};

/// Basis element of the word coalgebra L: a sequence of irreducible
/// isomorphism classes. The empty word is the unit.
using Word = std::vector<IsoClass>;

/// Pair sums for H ⊗ H and L ⊗ L.
using IsoPairSum = std::map<std::pair<IsoClass, IsoClass>, Rational>;
using WordPairSum = std::map<std::pair<Word, Word>, Rational>;
using WordSum = std::map<Word, Rational>;

/// A chain ∅ = S_0 ⊂ … ⊂ S_k = S of subsets of one ground set, strict
/// inclusions, encoded as masks.
struct SetChain {
  std::vector<SetMask> subsets;
};

/// Exact-rational square matrix; for Φ it is upper triangular with
/// nonzero diagonal under the class ordering.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dimension)
      : n_(dimension),
        entries_(static_cast<size_t>(dimension) * static_cast<size_t>(dimension),
                 Rational(0)) {}

  int dimension() const { return n_; }
  Rational& at(int i, int j) { return entries_[index(i, j)]; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

  bool is_upper_triangular() const;
  bool has_nonzero_diagonal() const;

  /// Exact inverse by back-substitution; requires upper triangular with
  /// nonzero diagonal (Errc::SingularMatrix / Errc::BadArgument).
  RationalMatrix inverse_upper_triangular() const;

  RationalMatrix operator*(const RationalMatrix& other) const;
  static RationalMatrix identity(int dimension);
  bool operator==(const RationalMatrix&) const = default;

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) +
           static_cast<size_t>(j);
  }
  int n_ = 0;
  std::vector<Rational> entries_;
};

/// π: C → H, merging isomorphic matroids' coefficients.
IsoSum project_iso(const FormalSum& x);

/// ⟨M⟩⟨N⟩ = ⟨M ⊕ N⟩, representatives on disjoint relabeled grounds.
IsoClass iso_direct_sum(const IsoClass& a, const IsoClass& b);
IsoSum iso_product(const IsoSum& x, const IsoSum& y);

/// δ_H⟨M⟩ = Σ_A ⟨M|A⟩ ⊗ ⟨M/A⟩, independent of the representative.
IsoPairSum h_coproduct(const IsoClass& c);
IsoPairSum h_coproduct(const IsoSum& x);

/// Componentwise product on H ⊗ H, for the Hopf-compatibility check.
IsoPairSum pair_product(const IsoPairSum& x, const IsoPairSum& y);

/// Deconcatenation coproduct of L: a word of length k yields k+1 terms.
WordPairSum l_coproduct(const Word& w);

/// Factorization word of a class: the unique sequence of irreducible
/// classes whose free product is the class. Empty word for the unit.
Word factor_word(const IsoClass& c);

/// All M-irreducible chains: ∅ = S_0 ⊂ … ⊂ S_k = S with every minor
/// M(S_{i-1}, S_i) irreducible. Capped at kMaxEnumerationSize.
std::vector<SetChain> irreducible_chains(const Matroid& m);

/// M(C) = M(S_0,S_1) □ … □ M(S_{k-1},S_k). Throws Errc::ChainMismatch
/// unless C runs from ∅ to the full ground set with strict steps.
Matroid chain_matroid(const Matroid& m, const SetChain& chain);

/// φ(⟨M⟩) as a sum of words: Σ_{C ∈ ic M} word(M(C)).
WordSum phi_word_image(const Matroid& m);

struct PhiResult {
  /// Iso classes of W_M in a linear extension of the projected weak order,
  /// ⟨M⟩ first, canonical-form order within incomparable groups.
  std::vector<IsoClass> classes;
  /// phi.at(i,j) = c(e_i, e_j), the number of e_i-representative chains
  /// whose chain matroid lands in class e_j. Upper triangular.
  RationalMatrix phi;
};

PhiResult phi_matrix(const Matroid& m);

/// p_M = φ^{-1}(⟨M⟩): the ⟨M⟩-row of Φ^{-1} against the class ordering.
IsoSum p_basis(const Matroid& m);

struct MapVerdict {
  bool pass;
  std::string detail;
};

/// Evaluates δ_L(φ⟨M⟩) and (φ⊗φ)δ_H⟨M⟩ as word-tensor sums and compares.
/// Capped at |S| ≤ 5.
MapVerdict verify_phi_coalgebra_map(const Matroid& m);

}  // namespace minorhopf

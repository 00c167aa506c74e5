#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorhopf/error.hpp"

namespace minorhopf {

/// A ground-set element. Labels are short text tokens ("a", "x3"); they
/// must be nonempty and unique within one ground set.
using Label = std::string;

/// Subset of a ground set, encoded as a bit pattern: bit i stands for the
/// i-th label of the owning GroundSet.
using SetMask = std::uint32_t;

/// Encoding width of SetMask; ground sets beyond this are rejected.
inline constexpr int kMaxGroundSize = 16;

/// Cap for full-stratum and order-filter enumeration (weak_order).
inline constexpr int kMaxEnumerationSize = 6;

/// Cap for brute-force canonicalization (n! relabelings).
inline constexpr int kMaxCanonicalSize = 8;

inline int popcount(SetMask m) { return std::popcount(m); }

/// An ordered, duplicate-free sequence of labels. The order is fixed at
/// construction and defines the bit positions used by SetMask.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<Label> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const Label& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<Label>& labels() const { return labels_; }

  SetMask full_mask() const {
    return size() == 0 ? 0 : static_cast<SetMask>((1u << size()) - 1);
  }

  std::optional<int> index_of(std::string_view label) const;

  /// Mask of the given labels; throws Errc::UnknownLabel.
  SetMask mask_of(const std::vector<Label>& labels) const;

  /// Labels of a mask, in ground order.
  std::vector<Label> labels_of(SetMask mask) const;

  /// Labels of `mask` as a new GroundSet (keeps order).
  GroundSet subset(SetMask mask) const;

  bool operator==(const GroundSet&) const = default;
  auto operator<=>(const GroundSet&) const = default;

 private:
  std::vector<Label> labels_;
};

/// Concatenation; throws Errc::GroundOverlap when label sets intersect.
GroundSet disjoint_union(const GroundSet& left, const GroundSet& right);

class Matroid;

namespace detail {
/// Trusted constructor for families that are matroids by construction
/// (duals, minors, products, enumeration output). Bases must be sorted.
Matroid make_unchecked(GroundSet ground, int rank, std::vector<SetMask> bases);
}  // namespace detail

/// A matroid given by its ground set and basis family. Immutable value;
/// all operations below are pure functions.
///
/// Construction through from_bases verifies the basis axioms (nonempty,
/// equicardinal, exchange); the algebraic constructors (uniform, dual,
/// direct_sum, free_product, minor) produce valid families by construction
/// and skip the quadratic exchange check.
class Matroid {
 public:
  /// The empty matroid: empty ground set, bases = { {} }, rank 0. Unit of
  /// both direct sum and free product.
  Matroid();

  static Matroid from_bases(GroundSet ground, std::vector<SetMask> bases);
  static Matroid from_label_bases(GroundSet ground,
                                  const std::vector<std::vector<Label>>& bases);

  /// U_{r,n}: bases are all r-subsets. uniform(0,{a}) is the loop Z(a),
  /// uniform(1,{a}) the isthmus I(a). Throws Errc::RankOutOfRange.
  static Matroid uniform(int rank, GroundSet ground);

  /// Single-element shorthands.
  static Matroid loop(Label a);
  static Matroid isthmus(Label a);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  int nullity() const { return size() - rank_; }
  SetMask full_mask() const { return ground_.full_mask(); }

  /// Sorted ascending by mask value.
  const std::vector<SetMask>& bases() const { return bases_; }
  bool is_basis(SetMask b) const;

  /// ρ(A) = max over bases of |B ∩ A|. Memoized (full table, built once
  /// per value on first use). Throws Errc::NotASubset.
  int rank_of(SetMask subset) const;
  int rank_of(const std::vector<Label>& labels) const;

  bool is_independent(SetMask subset) const {
    return rank_of(subset) == popcount(subset);
  }
  bool spans(SetMask subset) const { return rank_of(subset) == rank_; }
  int nullity_of(SetMask subset) const {
    return popcount(subset) - rank_of(subset);
  }

  /// Strict value identity: same ground order, same basis family. For
  /// order-insensitive comparison see labeled_equal.
  bool operator==(const Matroid& other) const {
    return rank_ == other.rank_ && ground_ == other.ground_ &&
           bases_ == other.bases_;
  }
  /// Deterministic total order (ground labels, rank, basis encoding);
  /// used as map key order and for display sorting.
  std::strong_ordering operator<=>(const Matroid& other) const;

 private:
  struct Unchecked {};
  Matroid(GroundSet ground, int rank, std::vector<SetMask> bases, Unchecked);

  struct RankMemo;

  GroundSet ground_;
  int rank_ = 0;
  std::vector<SetMask> bases_;
  std::shared_ptr<RankMemo> memo_;

  friend Matroid detail::make_unchecked(GroundSet, int, std::vector<SetMask>);
};

/// M*: bases are the complements of the bases of M.
Matroid dual(const Matroid& m);

/// M ⊕ N on the concatenated ground set; throws Errc::GroundOverlap.
Matroid direct_sum(const Matroid& m, const Matroid& n);

/// Free product M □ N: bases are the sets B of size ρ(M)+ρ(N) with B∩S
/// independent in M and B∩T spanning in N. Throws Errc::GroundOverlap.
Matroid free_product(const Matroid& m, const Matroid& n);

/// M(A,B) = (M|B)/A for A ⊆ B ⊆ S, on ground B\A. Throws Errc::NotNested.
Matroid minor(const Matroid& m, SetMask contracted, SetMask kept);
Matroid restriction(const Matroid& m, SetMask kept);
Matroid contraction(const Matroid& m, SetMask contracted);

/// Permutes bit positions so the result's ground equals `target` (same
/// label set required; throws Errc::SizeMismatch / Errc::UnknownLabel).
Matroid reorder(const Matroid& m, const GroundSet& target);

/// Equality as labeled matroids: same label set and same basis family,
/// ground order ignored.
bool labeled_equal(const Matroid& a, const Matroid& b);

/// Rank-preserving weak order: a ≤ b iff every basis of a is a basis of b.
/// Both matroids must live on the same label set (order may differ);
/// throws Errc::SizeMismatch otherwise. Distinct ranks are incomparable.
bool weak_leq(const Matroid& a, const Matroid& b);

/// True iff M = M|U □ M/U as labeled matroids. ∅ and S are the trivial
/// free separators. Throws Errc::NotASubset.
bool is_free_separator(const Matroid& m, SetMask u);

/// No nonempty proper free separator. Throws Errc::EmptyMatroid.
bool is_irreducible(const Matroid& m);

/// Irreducible factors whose left-to-right free product recomposes M (as
/// a labeled matroid). Factors are chosen leftmost-greedily: the smallest
/// free separator U, by (|U|, bit pattern), with M|U irreducible. The
/// iso-class sequence does not depend on this choice.
std::vector<Matroid> factor(const Matroid& m);

/// Canonical form of a matroid under ground-set relabeling: the
/// lexicographically least encoded basis family over all |S|! relabelings,
/// presented over the standard ground set "0", …, "n-1".
class IsoClass {
 public:
  const Matroid& canonical() const { return canonical_; }
  int size() const { return canonical_.size(); }
  int rank() const { return canonical_.rank(); }

  bool operator==(const IsoClass& other) const {
    return canonical_ == other.canonical_;
  }
  std::strong_ordering operator<=>(const IsoClass& other) const {
    return canonical_ <=> other.canonical_;
  }

 private:
  explicit IsoClass(Matroid canonical) : canonical_(std::move(canonical)) {}
  Matroid canonical_;

  friend IsoClass canonicalize(const Matroid&);
};

/// Two matroids are isomorphic iff their canonical forms are identical.
/// Brute-forces all n! relabelings (memoized); ground sets larger than
/// kMaxCanonicalSize are rejected.
IsoClass canonicalize(const Matroid& m);

/// All subsets of `universe` with `size` bits, ascending by mask value.
std::vector<SetMask> masked_subsets(SetMask universe, int size);

}  // namespace minorhopf

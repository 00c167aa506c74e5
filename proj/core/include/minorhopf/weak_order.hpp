#pragma once

#include <optional>
#include <vector>

#include "minorhopf/matroid.hpp"
#include "minorhopf/poset.hpp"

namespace minorhopf {

/// A finite piece of the weak order: matroids on one ground set together
/// with the containment order on their basis families. Element indices
/// into `order` match positions in `elements`; elements are listed in
/// ascending encoded-basis-family order, so index 0 of an order filter is
/// its minimum.
struct WeakPoset {
  std::vector<Matroid> elements;
  Poset order;

  int index_of(const Matroid& m) const;
};

/// W_M split by irreducibility: the full filter, the subposet R_M of
/// reducible elements plus M itself, and the set I_M \ {M}.
struct FilterTriple {
  WeakPoset wfilter;
  WeakPoset rfilter;
  std::vector<Matroid> iset;
};

/// Every matroid on `ground` (of the given rank when supplied), each
/// exactly once, ascending by encoded basis family. |ground| is capped at
/// kMaxEnumerationSize (Errc::GroundTooLarge).
std::vector<Matroid> enumerate_matroids(const GroundSet& ground,
                                        std::optional<int> rank = std::nullopt);

/// One rank stratum of W_S as a poset. Capped at |S| ≤ 5 to keep the
/// relation matrix desk-sized.
WeakPoset weak_poset(const GroundSet& ground, int rank);

/// The order filter W_M = {N : N ≥ M} with its reducible/irreducible
/// split. Enumerates only families containing bases(M).
FilterTriple order_filter(const Matroid& m);

/// φ_U(M) = M|U □ M/U, reordered back to M's ground. A closure operator
/// on each stratum; fixed points are the matroids with free separator U.
Matroid phi_u(const Matroid& m, SetMask u);

/// All L on S ∪ T with L|S = P and L/S = Q; by the interval description
/// this equals [P⊕Q, P□Q] in the weak order. Throws Errc::GroundOverlap.
std::vector<Matroid> fiber_interval(const Matroid& p, const Matroid& q);

/// Projected weak order on isomorphism classes: true iff some relabeling
/// of a representative of `a` is ≤ the canonical representative of `b`.
/// Throws Errc::SizeMismatch when sizes or ranks differ.
bool iso_weak_leq(const IsoClass& a, const IsoClass& b);

}  // namespace minorhopf

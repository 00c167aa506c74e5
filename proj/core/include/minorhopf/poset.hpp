#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "minorhopf/error.hpp"

namespace minorhopf {

/// A finite poset over element indices 0..n-1 with the order relation held
/// as a bit matrix. Möbius values are memoized; the cache is shared across
/// copies and internally synchronized, so values behave as immutable.
class Poset {
 public:
  Poset() = default;

  /// Checks reflexivity, antisymmetry and transitivity eagerly (O(n^3));
  /// violations throw Errc::OrderAxiomViolation.
  static Poset from_relation(int n, const std::function<bool(int, int)>& leq);

  /// For relations that are orders by construction (e.g. set containment).
  static Poset from_relation_unchecked(int n,
                                       const std::function<bool(int, int)>& leq);

  int size() const { return n_; }
  bool leq(int x, int y) const { return matrix_[index(x, y)]; }
  bool less(int x, int y) const { return x != y && leq(x, y); }

  /// Indices y with x ≤ y ≤ z, ascending.
  std::vector<int> interval(int x, int z) const;

  /// μ(x,z) by the memoized recursion μ(x,z) = -Σ_{x≤y<z} μ(x,y).
  /// Throws Errc::NotComparable unless x ≤ z.
  long long mobius(int x, int z) const;

  /// Independent oracle: Σ over chains x = x_0 < … < x_k = z of (-1)^k.
  /// Never consults the recursion or its cache.
  long long mobius_hall(int x, int z) const;

  /// Möbius value inside the subposet {x,z} ∪ ([x,z] ∩ Q).
  long long mobius_relative(const std::vector<bool>& in_q, int x, int z) const;

  /// Subposet induced on `keep` (indices into this poset, ascending order
  /// of appearance defines the new indices).
  Poset induced(const std::vector<int>& keep) const;

  std::optional<int> minimum() const;

  /// Covering pairs (x, y), x covered by y.
  std::vector<std::pair<int, int>> hasse_edges() const;

 private:
  size_t index(int x, int y) const {
    return static_cast<size_t>(x) * static_cast<size_t>(n_) +
           static_cast<size_t>(y);
  }

  struct MobiusCache;

  int n_ = 0;
  std::vector<bool> matrix_;
  std::shared_ptr<MobiusCache> cache_;
};

/// An idempotent, order-preserving, increasing self-map of a poset. All
/// three axioms are checked at construction (Errc::ClosureAxiomViolation).
class ClosureMap {
 public:
  ClosureMap(const Poset& poset, std::vector<int> image);

  int operator()(int x) const { return image_[static_cast<size_t>(x)]; }
  const std::vector<int>& image() const { return image_; }
  bool is_closed(int x) const { return (*this)(x) == x; }

 private:
  std::vector<int> image_;
};

struct RotaVerdict {
  bool pass;
  long long fiber_sum;  // Σ_{x: φ(x)=b} μ(a,x)
  long long expected;   // μ_φ(a,b) when a,b closed, 0 otherwise
};

/// Rota's closure theorem instance check for a ≤ b.
RotaVerdict check_rota(const Poset& poset, const ClosureMap& phi, int a, int b);

struct SplitVerdict {
  bool pass;
  long long lhs;  // μ_P(x,z)
  long long rhs;  // Σ_{y ∈ [x,z)_Q} μ_P(x,y) μ_R(y,z), R = P\Q
};

/// Checks the split identity for x < z with Q given as an index set.
SplitVerdict check_split(const Poset& poset, const std::vector<int>& q, int x,
                         int z);

struct SupportResult {
  Poset poset;            // induced on kept
  std::vector<int> kept;  // original indices with μ(x, ·) ≠ 0
};

/// Subposet of elements with nonzero Möbius value from the minimum x.
/// Throws Errc::NoMinimum unless x is the minimum of the poset.
SupportResult nonzero_support(const Poset& poset, int x);

}  // namespace minorhopf

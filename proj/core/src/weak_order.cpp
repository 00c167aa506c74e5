#include "minorhopf/weak_order.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <string>

namespace minorhopf {

namespace {

// Exchange axiom for one ordered pair, with membership looked up in a
// word indexed by subset mask value (needs |S| ≤ 6).
inline bool exchange_ok(SetMask b1, SetMask b2, std::uint64_t present, int n) {
  const SetMask out = b1 & ~b2;
  const SetMask in = b2 & ~b1;
  for (int x = 0; x < n; ++x) {
    if (!(out >> x & 1)) continue;
    const SetMask stripped = b1 ^ (SetMask{1} << x);
    bool repaired = false;
    for (int y = 0; y < n && !repaired; ++y)
      if ((in >> y & 1) && (present >> (stripped | SetMask{1} << y) & 1))
        repaired = true;
    if (!repaired) return false;
  }
  return true;
}

bool family_is_matroid(const std::vector<SetMask>& family,
                       std::uint64_t present, int n) {
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!exchange_ok(family[i], family[j], present, n) ||
          !exchange_ok(family[j], family[i], present, n))
        return false;
  return true;
}

void require_enumerable(const GroundSet& ground) {
  if (ground.size() > kMaxEnumerationSize)
    fail(Errc::GroundTooLarge,
         "enumeration is capped at " + std::to_string(kMaxEnumerationSize) +
             " elements; ground has " + std::to_string(ground.size()));
}

// All matroid basis families of rank r that contain `base` and otherwise
// draw from `pool`; emitted ascending by encoded family value.
std::vector<std::vector<SetMask>> scan_families(const GroundSet& ground,
                                                const std::vector<SetMask>& base,
                                                const std::vector<SetMask>& pool) {
  const int n = ground.size();
  std::uint64_t base_present = 0;
  for (SetMask b : base) base_present |= std::uint64_t{1} << b;

  std::vector<std::vector<SetMask>> out;
  const size_t k = pool.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<SetMask> family = base;
    std::uint64_t present = base_present;
    for (size_t i = 0; i < k; ++i)
      if (pick >> i & 1) {
        family.push_back(pool[i]);
        present |= std::uint64_t{1} << pool[i];
      }
    if (family.empty()) continue;
    std::sort(family.begin(), family.end());
    if (family_is_matroid(family, present, n)) out.push_back(std::move(family));
  }
  return out;
}

std::vector<Matroid> stratum(const GroundSet& ground, int r) {
  const auto subs = masked_subsets(ground.full_mask(), r);
  std::vector<Matroid> out;
  for (auto& family : scan_families(ground, {}, subs))
    out.push_back(detail::make_unchecked(ground, r, std::move(family)));
  return out;
}

// Containment order on basis families; valid ordering by construction.
Poset containment_order(const std::vector<Matroid>& elements) {
  return Poset::from_relation_unchecked(
      static_cast<int>(elements.size()), [&elements](int i, int j) {
        const auto& a = elements[static_cast<size_t>(i)].bases();
        const auto& b = elements[static_cast<size_t>(j)].bases();
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
      });
}

}  // namespace

int WeakPoset::index_of(const Matroid& m) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return static_cast<int>(i);
  return -1;
}

std::vector<Matroid> enumerate_matroids(const GroundSet& ground,
                                        std::optional<int> rank) {
  require_enumerable(ground);
  if (rank) {
    if (*rank < 0 || *rank > ground.size())
      fail(Errc::RankOutOfRange,
           "rank " + std::to_string(*rank) + " out of range");
    return stratum(ground, *rank);
  }
  std::vector<Matroid> all;
  for (int r = 0; r <= ground.size(); ++r) {
    auto s = stratum(ground, r);
    all.insert(all.end(), s.begin(), s.end());
  }
  return all;
}

WeakPoset weak_poset(const GroundSet& ground, int rank) {
  if (ground.size() > 5)
    fail(Errc::GroundTooLarge, "stratum posets are capped at 5 elements");
  WeakPoset wp;
  wp.elements = enumerate_matroids(ground, rank);
  wp.order = containment_order(wp.elements);
  return wp;
}

FilterTriple order_filter(const Matroid& m) {
  require_enumerable(m.ground());
  const auto subs = masked_subsets(m.full_mask(), m.rank());
  std::vector<SetMask> pool;
  for (SetMask s : subs)
    if (!m.is_basis(s)) pool.push_back(s);

  FilterTriple ft;
  for (auto& family : scan_families(m.ground(), m.bases(), pool))
    ft.wfilter.elements.push_back(
        detail::make_unchecked(m.ground(), m.rank(), std::move(family)));
  ft.wfilter.order = containment_order(ft.wfilter.elements);

  // Split by irreducibility; M itself (index 0) always joins R_M.
  std::vector<int> reducible_idx;
  for (size_t i = 0; i < ft.wfilter.elements.size(); ++i) {
    // The empty matroid is the unit, not an irreducible.
    const bool irr = ft.wfilter.elements[i].size() > 0 &&
                     is_irreducible(ft.wfilter.elements[i]);
    if (irr && i != 0) ft.iset.push_back(ft.wfilter.elements[i]);
    if (!irr || i == 0) reducible_idx.push_back(static_cast<int>(i));
  }
  for (int i : reducible_idx)
    ft.rfilter.elements.push_back(ft.wfilter.elements[static_cast<size_t>(i)]);
  ft.rfilter.order = ft.wfilter.order.induced(reducible_idx);
  return ft;
}

Matroid phi_u(const Matroid& m, SetMask u) {
  if (u & ~m.full_mask())
    fail(Errc::NotASubset,
         "mask " + std::to_string(u) + " is not a subset of the ground set");
  if (u == 0 || u == m.full_mask()) return m;
  return reorder(free_product(restriction(m, u), contraction(m, u)),
                 m.ground());
}

std::vector<Matroid> fiber_interval(const Matroid& p, const Matroid& q) {
  const Matroid bottom = direct_sum(p, q);  // checks ground disjointness
  require_enumerable(bottom.ground());
  const GroundSet& ground = bottom.ground();
  const int r = bottom.rank();
  const SetMask left = p.ground().full_mask();

  std::vector<SetMask> pool;
  for (SetMask s : masked_subsets(ground.full_mask(), r))
    if (!bottom.is_basis(s)) pool.push_back(s);

  std::vector<Matroid> out;
  for (auto& family : scan_families(ground, bottom.bases(), pool)) {
    Matroid l = detail::make_unchecked(ground, r, std::move(family));
    if (restriction(l, left) == p &&
        contraction(l, left) == q)
      out.push_back(std::move(l));
  }
  return out;
}

bool iso_weak_leq(const IsoClass& a, const IsoClass& b) {
  if (a.size() != b.size() || a.rank() != b.rank())
    fail(Errc::SizeMismatch,
         "iso weak order compares classes of equal size and rank");
  const int n = a.size();
  std::bitset<256> present;
  for (SetMask m : b.canonical().bases()) present.set(m);

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool contained = true;
    for (SetMask m : a.canonical().bases()) {
      SetMask img = 0;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) img |= SetMask{1} << perm[static_cast<size_t>(i)];
      if (!present.test(img)) {
        contained = false;
        break;
      }
    }
    if (contained) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace minorhopf

#include "minorhopf/matroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace minorhopf {

namespace {

std::string join_labels(const std::vector<Label>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

std::string mask_string(const GroundSet& g, SetMask m) {
  return join_labels(g.labels_of(m));
}

}  // namespace

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxGroundSize)
    fail(Errc::GroundTooLarge,
         "ground set of size " + std::to_string(labels_.size()) +
             " exceeds the encoding width " + std::to_string(kMaxGroundSize));
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty())
      fail(Errc::BadArgument, "empty label at position " + std::to_string(i));
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        fail(Errc::DuplicateLabel, "label '" + labels_[i] + "' repeats");
  }
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

SetMask GroundSet::mask_of(const std::vector<Label>& labels) const {
  SetMask m = 0;
  for (const Label& l : labels) {
    auto idx = index_of(l);
    if (!idx) fail(Errc::UnknownLabel, "label '" + l + "' is not in the ground set");
    m |= SetMask{1} << *idx;
  }
  return m;
}

std::vector<Label> GroundSet::labels_of(SetMask mask) const {
  std::vector<Label> out;
  for (int i = 0; i < size(); ++i)
    if (mask >> i & 1) out.push_back(labels_[static_cast<size_t>(i)]);
  return out;
}

GroundSet GroundSet::subset(SetMask mask) const {
  return GroundSet(labels_of(mask));
}

GroundSet disjoint_union(const GroundSet& left, const GroundSet& right) {
  for (const Label& l : right.labels())
    if (left.index_of(l))
      fail(Errc::GroundOverlap, "ground sets share the label '" + l + "'");
  std::vector<Label> all = left.labels();
  all.insert(all.end(), right.labels().begin(), right.labels().end());
  return GroundSet(std::move(all));
}

std::vector<SetMask> masked_subsets(SetMask universe, int size) {
  std::vector<int> bits;
  for (int i = 0; i < kMaxGroundSize; ++i)
    if (universe >> i & 1) bits.push_back(i);
  const int n = static_cast<int>(bits.size());
  std::vector<SetMask> out;
  if (size < 0 || size > n) return out;
  std::vector<int> idx(static_cast<size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    SetMask m = 0;
    for (int i : idx) m |= SetMask{1} << bits[static_cast<size_t>(i)];
    out.push_back(m);
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - size + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < size; ++i)
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Matroid

struct Matroid::RankMemo {
  std::once_flag once;
  std::vector<std::uint8_t> table;  // rank per subset mask; empty until built
};

Matroid::Matroid() : Matroid(GroundSet{}, 0, {0}, Unchecked{}) {}

Matroid detail::make_unchecked(GroundSet ground, int rank,
                               std::vector<SetMask> bases) {
  return Matroid(std::move(ground), rank, std::move(bases),
                 Matroid::Unchecked{});
}

Matroid::Matroid(GroundSet ground, int rank, std::vector<SetMask> bases,
                 Unchecked)
    : ground_(std::move(ground)),
      rank_(rank),
      bases_(std::move(bases)),
      memo_(std::make_shared<RankMemo>()) {}

Matroid Matroid::from_bases(GroundSet ground, std::vector<SetMask> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) fail(Errc::EmptyBases, "a matroid needs at least one basis");

  const SetMask full = ground.full_mask();
  for (SetMask b : bases)
    if (b & ~full)
      fail(Errc::NotASubset, "basis pattern " + std::to_string(b) +
                                 " is not a subset of the ground set");
  const int rank = popcount(bases.front());
  for (SetMask b : bases)
    if (popcount(b) != rank)
      fail(Errc::UnequalCardinality,
           "bases " + mask_string(ground, bases.front()) + " and " +
               mask_string(ground, b) + " have different cardinalities");

  // Basis-exchange axiom, both directions of every pair.
  auto present = [&bases](SetMask m) {
    return std::binary_search(bases.begin(), bases.end(), m);
  };
  for (SetMask b1 : bases)
    for (SetMask b2 : bases) {
      SetMask out = b1 & ~b2;
      SetMask in = b2 & ~b1;
      for (int x = 0; x < ground.size(); ++x) {
        if (!(out >> x & 1)) continue;
        const SetMask stripped = b1 ^ (SetMask{1} << x);
        bool repaired = false;
        for (int y = 0; y < ground.size() && !repaired; ++y)
          if ((in >> y & 1) && present(stripped | SetMask{1} << y))
            repaired = true;
        if (!repaired)
          fail(Errc::ExchangeAxiomViolation,
               "no exchange for " + ground.label(x) + " in " +
                   mask_string(ground, b1) + " against " +
                   mask_string(ground, b2));
      }
    }
  return Matroid(std::move(ground), rank, std::move(bases), Unchecked{});
}

Matroid Matroid::from_label_bases(GroundSet ground,
                                  const std::vector<std::vector<Label>>& bases) {
  std::vector<SetMask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(ground.mask_of(b));
  return from_bases(std::move(ground), std::move(masks));
}

Matroid Matroid::uniform(int rank, GroundSet ground) {
  if (rank < 0 || rank > ground.size())
    fail(Errc::RankOutOfRange, "rank " + std::to_string(rank) +
                                   " out of range for a ground set of size " +
                                   std::to_string(ground.size()));
  std::vector<SetMask> bases = masked_subsets(ground.full_mask(), rank);
  return Matroid(std::move(ground), rank, std::move(bases), Unchecked{});

}

Matroid Matroid::loop(Label a) { return uniform(0, GroundSet({std::move(a)})); }

Matroid Matroid::isthmus(Label a) {
  return uniform(1, GroundSet({std::move(a)}));
}

bool Matroid::is_basis(SetMask b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

int Matroid::rank_of(SetMask subset) const {
  if (subset & ~full_mask())
    fail(Errc::NotASubset, "mask " + std::to_string(subset) +
                               " is not a subset of the ground set");
  // Small grounds get a full table; beyond that, compute per query.
  if (size() <= 12) {
    std::call_once(memo_->once, [this] {
      memo_->table.assign(size_t{1} << size(), 0);
      for (SetMask a = 0; a < (SetMask{1} << size()); ++a) {
        int best = 0;
        for (SetMask b : bases_) best = std::max(best, popcount(b & a));
        memo_->table[a] = static_cast<std::uint8_t>(best);
      }
    });
    return memo_->table[subset];
  }
  int best = 0;
  for (SetMask b : bases_) best = std::max(best, popcount(b & subset));
  return best;
}

int Matroid::rank_of(const std::vector<Label>& labels) const {
  return rank_of(ground_.mask_of(labels));
}

std::strong_ordering Matroid::operator<=>(const Matroid& other) const {
  if (auto c = ground_.labels() <=> other.ground_.labels(); c != 0) return c;
  if (auto c = rank_ <=> other.rank_; c != 0) return c;
  return bases_ <=> other.bases_;
}

// ---------------------------------------------------------------------------
// Constructions

Matroid dual(const Matroid& m) {
  const SetMask full = m.full_mask();
  std::vector<SetMask> bases;
  bases.reserve(m.bases().size());
  for (SetMask b : m.bases()) bases.push_back(full & ~b);
  std::sort(bases.begin(), bases.end());
  return detail::make_unchecked(m.ground(), m.size() - m.rank(),
                                std::move(bases));
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  GroundSet ground = disjoint_union(m.ground(), n.ground());
  const int shift = m.size();
  std::vector<SetMask> bases;
  bases.reserve(m.bases().size() * n.bases().size());
  for (SetMask b2 : n.bases())
    for (SetMask b1 : m.bases()) bases.push_back(b1 | (b2 << shift));
  std::sort(bases.begin(), bases.end());
  return detail::make_unchecked(std::move(ground), m.rank() + n.rank(),
                                std::move(bases));
}

Matroid free_product(const Matroid& m, const Matroid& n) {
  GroundSet ground = disjoint_union(m.ground(), n.ground());
  const int shift = m.size();
  const SetMask left = m.full_mask();
  const int rank = m.rank() + n.rank();
  std::vector<SetMask> bases;
  for (SetMask b : masked_subsets(ground.full_mask(), rank)) {
    const SetMask bs = b & left;
    const SetMask bt = b >> shift;
    if (m.is_independent(bs) && n.spans(bt)) bases.push_back(b);
  }
  return detail::make_unchecked(std::move(ground), rank, std::move(bases));
}

Matroid minor(const Matroid& m, SetMask contracted, SetMask kept) {
  const SetMask full = m.full_mask();
  if ((contracted & ~kept) || (kept & ~full))
    fail(Errc::NotNested, "minor needs A \xe2\x8a\x86 B \xe2\x8a\x86 S; got A=" +
                              std::to_string(contracted) +
                              " B=" + std::to_string(kept));
  GroundSet ground = m.ground().subset(kept & ~contracted);
  const int rank = m.rank_of(kept) - m.rank_of(contracted);
  const int rank_b = m.rank_of(kept);

  // Compress the bits of kept\contracted to positions 0..|ground|-1.
  std::vector<int> old_bits;
  for (int i = 0; i < m.size(); ++i)
    if ((kept & ~contracted) >> i & 1) old_bits.push_back(i);

  std::vector<SetMask> bases;
  for (SetMask xs : masked_subsets(SetMask((1u << old_bits.size()) - 1), rank)) {
    SetMask expanded = 0;
    for (size_t i = 0; i < old_bits.size(); ++i)
      if (xs >> i & 1) expanded |= SetMask{1} << old_bits[i];
    if (m.rank_of(expanded | contracted) == rank_b) bases.push_back(xs);
  }
  return detail::make_unchecked(std::move(ground), rank, std::move(bases));
}

Matroid restriction(const Matroid& m, SetMask kept) {
  return minor(m, 0, kept);
}

Matroid contraction(const Matroid& m, SetMask contracted) {
  return minor(m, contracted, m.full_mask());
}

Matroid reorder(const Matroid& m, const GroundSet& target) {
  if (target.size() != m.size())
    fail(Errc::SizeMismatch, "reorder target has " +
                                 std::to_string(target.size()) +
                                 " labels, matroid has " +
                                 std::to_string(m.size()));
  if (target == m.ground()) return m;
  std::vector<int> to(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    auto j = target.index_of(m.ground().label(i));
    if (!j)
      fail(Errc::UnknownLabel,
           "label '" + m.ground().label(i) + "' missing from reorder target");
    to[static_cast<size_t>(i)] = *j;
  }
  std::vector<SetMask> bases;
  bases.reserve(m.bases().size());
  for (SetMask b : m.bases()) {
    SetMask nb = 0;
    for (int i = 0; i < m.size(); ++i)
      if (b >> i & 1) nb |= SetMask{1} << to[static_cast<size_t>(i)];
    bases.push_back(nb);
  }
  std::sort(bases.begin(), bases.end());
  return detail::make_unchecked(target, m.rank(), std::move(bases));
}

bool labeled_equal(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  std::vector<Label> la = a.ground().labels(), lb = b.ground().labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  return reorder(b, a.ground()).bases() == a.bases();
}

bool weak_leq(const Matroid& a, const Matroid& b) {
  std::vector<Label> la = a.ground().labels(), lb = b.ground().labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb)
    fail(Errc::SizeMismatch, "weak order compares matroids on one ground set");
  const Matroid& bb = a.ground() == b.ground() ? b : reorder(b, a.ground());
  return std::includes(bb.bases().begin(), bb.bases().end(), a.bases().begin(),
                       a.bases().end());
}

// ---------------------------------------------------------------------------
// Free separators, irreducibility, factorization

bool is_free_separator(const Matroid& m, SetMask u) {
  const SetMask full = m.full_mask();
  if (u & ~full)
    fail(Errc::NotASubset,
         "mask " + std::to_string(u) + " is not a subset of the ground set");
  if (u == 0 || u == full) return true;
  Matroid prod = free_product(restriction(m, u), contraction(m, u));
  return reorder(prod, m.ground()) == m;
}

bool is_irreducible(const Matroid& m) {
  if (m.size() == 0) fail(Errc::EmptyMatroid, "the empty matroid has no factorization side");
  const SetMask full = m.full_mask();
  for (SetMask u = 1; u < full; ++u)
    if (is_free_separator(m, u)) return false;
  return true;
}

namespace {

// Nonempty proper subset masks ordered by (cardinality, bit pattern).
std::vector<SetMask> separator_scan_order(SetMask full, int n) {
  std::vector<SetMask> order;
  for (int c = 1; c < n; ++c) {
    auto level = masked_subsets(full, c);
    order.insert(order.end(), level.begin(), level.end());
  }
  return order;
}

}  // namespace

std::vector<Matroid> factor(const Matroid& m) {
  if (m.size() == 0) fail(Errc::EmptyMatroid, "cannot factor the empty matroid");
  std::vector<Matroid> factors;
  Matroid rest = m;
  while (true) {
    bool split = false;
    for (SetMask u : separator_scan_order(rest.full_mask(), rest.size())) {
      if (!is_free_separator(rest, u)) continue;
      Matroid head = restriction(rest, u);
      if (!is_irreducible(head)) continue;
      factors.push_back(std::move(head));
      rest = contraction(rest, u);
      split = true;
      break;
    }
    if (!split) {
      factors.push_back(rest);
      return factors;
    }
  }
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

std::vector<SetMask> relabeled_bases(const std::vector<SetMask>& bases,
                                     const std::vector<int>& perm, int n) {
  std::vector<SetMask> out;
  out.reserve(bases.size());
  for (SetMask b : bases) {
    SetMask nb = 0;
    for (int i = 0; i < n; ++i)
      if (b >> i & 1) nb |= SetMask{1} << perm[static_cast<size_t>(i)];
    out.push_back(nb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroundSet standard_ground(int n) {
  std::vector<Label> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

}  // namespace

IsoClass canonicalize(const Matroid& m) {
  const int n = m.size();
  if (n > kMaxCanonicalSize)
    fail(Errc::GroundTooLarge,
         "canonicalization brute-forces n! relabelings; |S| = " +
             std::to_string(n) + " exceeds " +
             std::to_string(kMaxCanonicalSize));

  using MemoKey = std::pair<int, std::vector<SetMask>>;
  static std::mutex memo_mutex;
  static std::map<MemoKey, std::vector<SetMask>> memo;

  MemoKey key{n, m.bases()};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end())
      return IsoClass(
          detail::make_unchecked(standard_ground(n), m.rank(), it->second));
  }

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SetMask> best = relabeled_bases(m.bases(), perm, n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto candidate = relabeled_bases(m.bases(), perm, n);
    if (candidate < best) best = std::move(candidate);
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), best);
  }
  return IsoClass(
      detail::make_unchecked(standard_ground(n), m.rank(), std::move(best)));
}

}  // namespace minorhopf

#include "minorhopf/hopf.hpp"

#include <algorithm>
#include <string>

#include "minorhopf/weak_order.hpp"

namespace minorhopf {

// ---------------------------------------------------------------------------
// IsoSum

void IsoSum::add(const IsoClass& c, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(c, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational IsoSum::coefficient(const IsoClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

IsoSum& IsoSum::operator+=(const IsoSum& other) {
  for (const auto& [c, k] : other.terms_) add(c, k);
  return *this;
}

IsoSum& IsoSum::operator-=(const IsoSum& other) {
  for (const auto& [c, k] : other.terms_) add(c, -k);
  return *this;
}

IsoSum& IsoSum::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, k] : terms_) k *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------
// RationalMatrix

bool RationalMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool RationalMatrix::has_nonzero_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if (at(i, i) == 0) return false;
  return true;
}

RationalMatrix RationalMatrix::inverse_upper_triangular() const {
  if (!is_upper_triangular())
    fail(Errc::BadArgument, "matrix is not upper triangular");
  if (!has_nonzero_diagonal())
    fail(Errc::SingularMatrix, "zero diagonal entry");
  RationalMatrix inv(n_);
  for (int i = 0; i < n_; ++i) {
    inv.at(i, i) = Rational(1) / at(i, i);
    for (int j = i + 1; j < n_; ++j) {
      Rational acc = 0;
      for (int k = i; k < j; ++k) acc += inv.at(i, k) * at(k, j);
      inv.at(i, j) = -acc / at(j, j);
    }
  }
  return inv;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (n_ != other.n_) fail(Errc::SizeMismatch, "matrix dimensions differ");
  RationalMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::identity(int dimension) {
  RationalMatrix out(dimension);
  for (int i = 0; i < dimension; ++i) out.at(i, i) = 1;
  return out;
}

// ---------------------------------------------------------------------------
// Projection and the coalgebras H and L

IsoSum project_iso(const FormalSum& x) {
  IsoSum out;
  for (const auto& [m, c] : x.terms()) out.add(canonicalize(m), c);
  return out;
}

namespace {

// Fresh labels "p<offset>", "p<offset+1>", … keep the two representatives
// disjoint no matter what the canonical grounds look like.
Matroid with_prefixed_labels(const Matroid& m, int offset) {
  std::vector<Label> labels;
  labels.reserve(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    labels.push_back("p" + std::to_string(offset + i));
  return detail::make_unchecked(GroundSet(std::move(labels)), m.rank(),
                                m.bases());
}

}  // namespace

IsoClass iso_direct_sum(const IsoClass& a, const IsoClass& b) {
  return canonicalize(direct_sum(with_prefixed_labels(a.canonical(), 0),
                                 with_prefixed_labels(b.canonical(), a.size())));
}

IsoSum iso_product(const IsoSum& x, const IsoSum& y) {
  IsoSum out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add(iso_direct_sum(a, b), ca * cb);
  return out;
}

IsoPairSum h_coproduct(const IsoClass& c) {
  IsoPairSum out;
  const Matroid& rep = c.canonical();
  const SetMask full = rep.full_mask();
  for (SetMask a = 0;; ++a) {
    auto key = std::make_pair(canonicalize(restriction(rep, a)),
                              canonicalize(contraction(rep, a)));
    auto [it, inserted] = out.emplace(std::move(key), Rational(1));
    if (!inserted) it->second += 1;
    if (a == full) break;
  }
  return out;
}

IsoPairSum h_coproduct(const IsoSum& x) {
  IsoPairSum out;
  for (const auto& [c, k] : x.terms())
    for (const auto& [pair, mult] : h_coproduct(c)) {
      auto [it, inserted] = out.emplace(pair, k * mult);
      if (!inserted) {
        it->second += k * mult;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

IsoPairSum pair_product(const IsoPairSum& x, const IsoPairSum& y) {
  IsoPairSum out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      auto key = std::make_pair(iso_direct_sum(a.first, b.first),
                                iso_direct_sum(a.second, b.second));
      auto [it, inserted] = out.emplace(std::move(key), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

WordPairSum l_coproduct(const Word& w) {
  WordPairSum out;
  for (size_t i = 0; i <= w.size(); ++i) {
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    auto [it, inserted] =
        out.emplace(std::make_pair(std::move(prefix), std::move(suffix)),
                    Rational(1));
    if (!inserted) it->second += 1;
  }
  return out;
}

Word factor_word(const IsoClass& c) {
  if (c.size() == 0) return {};
  Word word;
  for (const Matroid& f : factor(c.canonical())) word.push_back(canonicalize(f));
  return word;
}

// ---------------------------------------------------------------------------
// Chains

std::vector<SetChain> irreducible_chains(const Matroid& m) {
  if (m.size() > kMaxEnumerationSize)
    fail(Errc::GroundTooLarge, "chain enumeration is capped at " +
                                   std::to_string(kMaxEnumerationSize) +
                                   " elements");
  const SetMask full = m.full_mask();
  std::vector<SetChain> out;
  std::vector<SetMask> current{0};

  auto extend = [&](auto&& self, SetMask from) -> void {
    if (from == full) {
      out.push_back(SetChain{current});
      return;
    }
    const SetMask rest = full & ~from;
    // Nonempty submasks of the complement.
    for (SetMask t = rest; t != 0; t = (t - 1) & rest) {
      const SetMask next = from | t;
      if (is_irreducible(minor(m, from, next))) {
        current.push_back(next);
        self(self, next);
        current.pop_back();
      }
    }
  };
  extend(extend, 0);
  return out;
}

Matroid chain_matroid(const Matroid& m, const SetChain& chain) {
  const auto& s = chain.subsets;
  if (s.empty() || s.front() != 0 || s.back() != m.full_mask())
    fail(Errc::ChainMismatch, "chain must run from the empty set to the ground set");
  for (size_t i = 1; i < s.size(); ++i)
    if ((s[i - 1] & ~s[i]) != 0 || s[i - 1] == s[i])
      fail(Errc::ChainMismatch,
           "chain step " + std::to_string(i) + " is not a strict inclusion");
  Matroid prod;  // empty matroid, unit of the free product
  for (size_t i = 1; i < s.size(); ++i)
    prod = free_product(prod, minor(m, s[i - 1], s[i]));
  return prod;
}

namespace {

Word chain_word(const Matroid& m, const SetChain& chain) {
  Word w;
  for (size_t i = 1; i < chain.subsets.size(); ++i)
    w.push_back(canonicalize(minor(m, chain.subsets[i - 1], chain.subsets[i])));
  return w;
}

}  // namespace

WordSum phi_word_image(const Matroid& m) {
  WordSum out;
  for (const SetChain& chain : irreducible_chains(m)) {
    auto [it, inserted] = out.emplace(chain_word(m, chain), Rational(1));
    if (!inserted) it->second += 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The Φ matrix and p basis

PhiResult phi_matrix(const Matroid& m) {
  FilterTriple ft = order_filter(m);

  std::vector<IsoClass> classes;
  for (const Matroid& n : ft.wfilter.elements) {
    IsoClass c = canonicalize(n);
    if (std::find(classes.begin(), classes.end(), c) == classes.end())
      classes.push_back(std::move(c));
  }
  const int k = static_cast<int>(classes.size());

  // Linear extension of the projected weak order, minimal canonical form
  // first within the currently available classes. ⟨M⟩ is below every
  // class of W_M, so it comes out first.
  std::vector<std::vector<bool>> strictly_below(
      static_cast<size_t>(k), std::vector<bool>(static_cast<size_t>(k), false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j)
        strictly_below[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            iso_weak_leq(classes[static_cast<size_t>(i)],
                         classes[static_cast<size_t>(j)]);

  std::vector<IsoClass> ordered;
  std::vector<bool> placed(static_cast<size_t>(k), false);
  for (int round = 0; round < k; ++round) {
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (placed[static_cast<size_t>(i)]) continue;
      bool ready = true;
      for (int j = 0; j < k && ready; ++j)
        if (!placed[static_cast<size_t>(j)] &&
            strictly_below[static_cast<size_t>(j)][static_cast<size_t>(i)])
          ready = false;
      if (!ready) continue;
      if (pick < 0 ||
          classes[static_cast<size_t>(i)] < classes[static_cast<size_t>(pick)])
        pick = i;
    }
    placed[static_cast<size_t>(pick)] = true;
    ordered.push_back(classes[static_cast<size_t>(pick)]);
  }

  std::map<IsoClass, int> position;
  for (int i = 0; i < k; ++i) position.emplace(ordered[static_cast<size_t>(i)], i);

  RationalMatrix phi(k);
  for (int i = 0; i < k; ++i) {
    const Matroid& rep = ordered[static_cast<size_t>(i)].canonical();
    for (const SetChain& chain : irreducible_chains(rep)) {
      IsoClass target = canonicalize(chain_matroid(rep, chain));
      auto it = position.find(target);
      if (it == position.end())
        fail(Errc::BadArgument, "chain matroid left the class list of W_M");
      phi.at(i, it->second) += 1;
    }
  }
  return PhiResult{std::move(ordered), std::move(phi)};
}

IsoSum p_basis(const Matroid& m) {
  PhiResult pr = phi_matrix(m);
  if (pr.classes.empty() || !(pr.classes.front() == canonicalize(m)))
    fail(Errc::BadArgument, "class ordering does not start at the minimum");
  RationalMatrix inv = pr.phi.inverse_upper_triangular();
  IsoSum out;
  for (int j = 0; j < inv.dimension(); ++j)
    out.add(pr.classes[static_cast<size_t>(j)], inv.at(0, j));
  return out;
}

// ---------------------------------------------------------------------------
// Theorem-style checks

MapVerdict verify_phi_coalgebra_map(const Matroid& m) {
  if (m.size() > 5)
    fail(Errc::GroundTooLarge, "coalgebra-map check is capped at 5 elements");

  WordPairSum lhs;
  for (const SetChain& chain : irreducible_chains(m)) {
    const Word w = chain_word(m, chain);
    for (const auto& [split, mult] : l_coproduct(w)) {
      auto [it, inserted] = lhs.emplace(split, mult);
      if (!inserted) it->second += mult;
    }
  }

  WordPairSum rhs;
  const SetMask full = m.full_mask();
  for (SetMask a = 0;; ++a) {
    const Matroid below = restriction(m, a);
    const Matroid above = contraction(m, a);
    for (const SetChain& d : irreducible_chains(below))
      for (const SetChain& e : irreducible_chains(above)) {
        auto key = std::make_pair(chain_word(below, d), chain_word(above, e));
        auto [it, inserted] = rhs.emplace(std::move(key), Rational(1));
        if (!inserted) it->second += 1;
      }
    if (a == full) break;
  }

  if (lhs == rhs)
    return MapVerdict{true, "both sides have " +
                                std::to_string(lhs.size()) + " word pairs"};
  return MapVerdict{false, "sides differ: " + std::to_string(lhs.size()) +
                               " vs " + std::to_string(rhs.size()) +
                               " word pairs"};
}

}  // namespace minorhopf

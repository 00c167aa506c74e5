#include "minorhopf/coalgebra.hpp"

#include <algorithm>
#include <string>

namespace minorhopf {

namespace {

// Term keys use sorted-label ground order, so one labeled matroid has one
// key no matter how its ground happened to be ordered.
Matroid normalized(const Matroid& m) {
  std::vector<Label> labels = m.ground().labels();
  if (std::is_sorted(labels.begin(), labels.end())) return m;
  std::sort(labels.begin(), labels.end());
  return reorder(m, GroundSet(std::move(labels)));
}

}  // namespace

void FormalSum::add(const Matroid& m, const Rational& coefficient) {
  if (coefficient == 0) return;
  Matroid key = normalized(m);
  auto [it, inserted] = terms_.emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational FormalSum::coefficient(const Matroid& m) const {
  auto it = terms_.find(normalized(m));
  return it == terms_.end() ? Rational(0) : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

void TensorSum::add(const Matroid& left, const Matroid& right,
                    const Rational& coefficient) {
  if (coefficient == 0) return;
  Key key{normalized(left), normalized(right)};
  auto [it, inserted] = terms_.emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorSum& TensorSum::operator+=(const TensorSum& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorSum coproduct(const Matroid& m) {
  TensorSum out;
  const SetMask full = m.full_mask();
  for (SetMask a = 0;; ++a) {
    out.add(restriction(m, a), contraction(m, a), 1);
    if (a == full) break;
  }
  return out;
}

TensorSum coproduct(const FormalSum& x) {
  TensorSum out;
  for (const auto& [m, c] : x.terms()) {
    const SetMask full = m.full_mask();
    for (SetMask a = 0;; ++a) {
      out.add(restriction(m, a), contraction(m, a), c);
      if (a == full) break;
    }
  }
  return out;
}

Rational counit(const FormalSum& x) {
  Rational e = 0;
  for (const auto& [m, c] : x.terms())
    if (m.size() == 0) e += c;
  return e;
}

TensorSum reduced_coproduct(const FormalSum& x) {
  if (counit(x) != 0)
    fail(Errc::NonzeroCounit,
         "reduced coproduct requires counit zero; got " +
             format_rational(counit(x)));
  TensorSum out;
  for (const auto& [m, c] : x.terms()) {
    const SetMask full = m.full_mask();
    for (SetMask a = 0;; ++a) {
      if (a != 0 && a != full) out.add(restriction(m, a), contraction(m, a), c);
      if (a == full) break;
    }
  }
  return out;
}

FormalSum dual_product(const Matroid& p, const Matroid& q) {
  for (const Label& l : q.ground().labels())
    if (p.ground().index_of(l)) return FormalSum{};  // overlapping: zero
  FormalSum out;
  for (const Matroid& l : fiber_interval(p, q)) out.add(l, 1);
  return out;
}

FormalSum dual_product(const FormalSum& x, const FormalSum& y) {
  FormalSum out;
  for (const auto& [p, cp] : x.terms())
    for (const auto& [q, cq] : y.terms()) {
      FormalSum piece = dual_product(p, q);
      piece *= cp * cq;
      out += piece;
    }
  return out;
}

Rational pairing(const FormalSum& x, const FormalSum& y) {
  Rational total = 0;
  for (const auto& [m, c] : x.terms()) total += c * y.coefficient(m);
  return total;
}

Rational pairing(const TensorSum& x, const TensorSum& y) {
  Rational total = 0;
  const auto& ay = y.terms();
  for (const auto& [k, c] : x.terms()) {
    auto it = ay.find(k);
    if (it != ay.end()) total += c * it->second;
  }
  return total;
}

bool is_primitive(const FormalSum& x) {
  if (counit(x) != 0) return false;
  return reduced_coproduct(x).is_zero();
}

FormalSum project_grade(const FormalSum& x, const GroundSet& grade) {
  std::vector<Label> target = grade.labels();
  std::sort(target.begin(), target.end());
  FormalSum out;
  for (const auto& [m, c] : x.terms())
    if (m.ground().labels() == target) out.add(m, c);  // keys are sorted
  return out;
}

FormalSum w_basis(const Matroid& m) {
  FilterTriple ft = order_filter(m);
  FormalSum out;
  for (size_t i = 0; i < ft.wfilter.elements.size(); ++i)
    out.add(ft.wfilter.elements[i],
            to_rational(ft.wfilter.order.mobius(0, static_cast<int>(i))));
  return out;
}

FormalSum r_basis(const Matroid& m) {
  FilterTriple ft = order_filter(m);
  FormalSum out;
  for (size_t i = 0; i < ft.rfilter.elements.size(); ++i)
    out.add(ft.rfilter.elements[i],
            to_rational(ft.rfilter.order.mobius(0, static_cast<int>(i))));
  return out;
}

int primitive_dimension(const GroundSet& ground) {
  if (ground.size() > 4)
    fail(Errc::GroundTooLarge,
         "primitive dimension does full-stratum linear algebra; capped at 4");
  if (ground.size() == 0) return 0;  // counit pins the empty grade
  const std::vector<Matroid> grade = enumerate_matroids(ground);
  std::map<Matroid, int> column;
  for (size_t i = 0; i < grade.size(); ++i)
    column.emplace(normalized(grade[i]), static_cast<int>(i));

  const SetMask full = ground.full_mask();
  std::vector<std::vector<Rational>> rows;
  for (SetMask u = 1; u < full; ++u) {
    const GroundSet gu = ground.subset(u);
    const GroundSet gv = ground.subset(full & ~u);
    for (const Matroid& p : enumerate_matroids(gu))
      for (const Matroid& q : enumerate_matroids(gv)) {
        std::vector<Rational> row(grade.size(), Rational(0));
        for (const auto& [l, c] : dual_product(p, q).terms())
          row[static_cast<size_t>(column.at(l))] = c;
        rows.push_back(std::move(row));
      }
  }
  return static_cast<int>(grade.size()) - row_rank(std::move(rows));
}

}  // namespace minorhopf

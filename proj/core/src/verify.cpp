#include "minorhopf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "minorhopf/coalgebra.hpp"
#include "minorhopf/expr.hpp"
#include "minorhopf/hopf.hpp"
#include "minorhopf/matroid.hpp"
#include "minorhopf/poset.hpp"
#include "minorhopf/rational.hpp"
#include "minorhopf/weak_order.hpp"

namespace minorhopf {

namespace {

const std::vector<Label> kPool{"a", "b", "c", "d", "e", "f"};

GroundSet pool_ground(int from, int count) {
  std::vector<Label> labels(kPool.begin() + from, kPool.begin() + from + count);
  return GroundSet(std::move(labels));
}

// Small per-run cache of strata so the sweeps do not rescan families.
class Grades {
 public:
  const std::vector<Matroid>& on(int from, int count) {
    auto key = std::make_pair(from, count);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, enumerate_matroids(pool_ground(from, count)))
        .first->second;
  }

 private:
  std::map<std::pair<int, int>, std::vector<Matroid>> cache_;
};

// Relabeling of M by a permutation of its own ground positions.
Matroid relabeled(const Matroid& m, const std::vector<int>& perm) {
  std::vector<SetMask> bases;
  bases.reserve(m.bases().size());
  for (SetMask b : m.bases()) {
    SetMask nb = 0;
    for (int i = 0; i < m.size(); ++i)
      if (b >> i & 1) nb |= SetMask{1} << perm[static_cast<size_t>(i)];
    bases.push_back(nb);
  }
  return Matroid::from_bases(m.ground(), std::move(bases));
}

long long rank_formula(const Matroid& m, const Matroid& n, SetMask a) {
  const SetMask s = m.full_mask();
  const SetMask as = a & s;
  const SetMask at = a >> m.size();
  const int in_s = m.rank_of(as);
  const int in_t = n.rank_of(at);
  return in_s + in_t +
         std::min(m.rank() - in_s, popcount(at) - in_t);
}

struct Part {
  bool pass = true;
  std::string note;
};

void merge(Part& total, bool pass, const std::string& what) {
  if (!pass) {
    total.pass = false;
    if (!total.note.empty()) total.note += "; ";
    total.note += what;
  }
}

CheckResult timed(const std::string& name,
                  const std::function<Part()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Part part;
  try {
    part = body();
  } catch (const std::exception& e) {
    part.pass = false;
    part.note = std::string("exception: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  CheckResult result;
  result.name = name;
  result.pass = part.pass;
  result.detail = part.pass ? part.note : part.note;
  result.seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(stop - start)
          .count();
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 1: the four-term primitive on two double points.

Part check_example_wd() {
  Part part;
  const Matroid d = parse_matroid_expr("U(1,2;a,b)+U(1,2;c,d)");
  const FormalSum w = w_basis(d);
  const FormalSum r = r_basis(d);

  FormalSum expected(d);
  expected.add(parse_matroid_expr("I(a)*Z(b)*I(c)*Z(d)"), -1);
  expected.add(parse_matroid_expr("I(c)*Z(d)*I(a)*Z(b)"), -1);
  expected.add(parse_matroid_expr("U(2,4;a,b,c,d)"), 1);

  merge(part, w == expected, "w_D differs from the four-term sum");
  merge(part, r == expected, "r_D differs from w_D");
  merge(part, is_primitive(w), "w_D is not primitive");
  if (part.pass) part.note = "w_D = r_D has 4 terms and is primitive";
  return part;
}

// ---------------------------------------------------------------------------
// Criterion 2: the 5x5 chain-count matrix and its exact inverse.

Part check_example_phi5() {
  Part part;
  const Matroid m = parse_matroid_expr("U(2,3;a,b,c)+U(1,2;d,e)");
  const PhiResult pr = phi_matrix(m);
  merge(part, pr.classes.size() == 5,
        "expected 5 classes, got " + std::to_string(pr.classes.size()));
  if (!part.pass) return part;

  const std::vector<IsoClass> expected{
      canonicalize(m),
      canonicalize(parse_matroid_expr("I(a)*Z(b)*I(c)*I(d)*Z(e)")),
      canonicalize(parse_matroid_expr("I(a)*(U(1,2;b,c)+U(1,2;d,e))")),
      canonicalize(parse_matroid_expr("I(a)*I(b)*Z(c)*I(d)*Z(e)")),
      canonicalize(parse_matroid_expr("U(3,5;a,b,c,d,e)")),
  };
  // Class-order agnostic comparison: map the published ordering onto ours.
  std::vector<int> pos(5, -1);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (pr.classes[static_cast<size_t>(j)] == expected[static_cast<size_t>(i)])
        pos[static_cast<size_t>(i)] = j;
  for (int i = 0; i < 5; ++i)
    merge(part, pos[static_cast<size_t>(i)] >= 0,
          "expected class " + std::to_string(i + 1) + " missing");
  if (!part.pass) return part;

  const long long phi_rows[5][5] = {{1, 12, 3, 36, 72},
                                    {0, 12, 0, 24, 84},
                                    {0, 0, 1, 24, 96},
                                    {0, 0, 0, 12, 108},
                                    {0, 0, 0, 0, 120}};
  const char* inv_rows[5][5] = {{"1", "-1", "-3", "5", "-2"},
                                {"0", "1/12", "0", "-1/6", "11/120"},
                                {"0", "0", "1", "-2", "1"},
                                {"0", "0", "0", "1/12", "-3/40"},
                                {"0", "0", "0", "0", "1/120"}};
  const RationalMatrix inv = pr.phi.inverse_upper_triangular();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const int pi = pos[static_cast<size_t>(i)];
      const int pj = pos[static_cast<size_t>(j)];
      merge(part, pr.phi.at(pi, pj) == to_rational(phi_rows[i][j]),
            "phi(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") = " + format_rational(pr.phi.at(pi, pj)));
      merge(part, inv.at(pi, pj) == parse_rational(inv_rows[i][j]),
            "phi_inv(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") = " + format_rational(inv.at(pi, pj)));
    }

  const IsoSum p = p_basis(m);
  const long long p_coeff[5] = {1, -1, -3, 5, -2};
  merge(part, p.terms().size() == 5, "p_M term count");
  for (int i = 0; i < 5; ++i)
    merge(part,
          p.coefficient(expected[static_cast<size_t>(i)]) ==
              to_rational(p_coeff[i]),
          "p_M coefficient of e" + std::to_string(i + 1));
  if (part.pass) part.note = "phi, phi^-1 and p_M match entry for entry";
  return part;
}

// ---------------------------------------------------------------------------
// Criterion 3: the projection of r_M equals p_M on every irreducible
// matroid of size at most five.

Part check_theorem65(int max_size, Grades& grades) {
  Part part;
  const int cap = std::min(max_size, 5);
  const int census_expected[5] = {2, 0, 0, 3, 20};
  int verified = 0;
  for (int n = 1; n <= cap; ++n) {
    int census = 0;
    for (const Matroid& m : grades.on(0, n)) {
      if (!is_irreducible(m)) continue;
      ++census;
      ++verified;
      if (!(project_iso(r_basis(m)) == p_basis(m))) {
        merge(part, false, "pi(r_M) != p_M on a size-" + std::to_string(n) +
                               " irreducible");
        return part;
      }
    }
    merge(part, census == census_expected[n - 1],
          "irreducible census at size " + std::to_string(n) + " is " +
              std::to_string(census));
  }
  if (part.pass)
    part.note =
        "pi(r_M) = p_M on all " + std::to_string(verified) + " irreducibles";
  return part;
}

// ---------------------------------------------------------------------------
// Criterion 4: primitive-space dimensions against the irreducible census.

Part check_primitive_dimensions(Grades& grades) {
  Part part;
  const int expected[4] = {2, 0, 0, 3};
  for (int n = 1; n <= 4; ++n) {
    const int dim = primitive_dimension(pool_ground(0, n));
    int census = 0;
    for (const Matroid& m : grades.on(0, n))
      if (is_irreducible(m)) ++census;
    merge(part, dim == expected[n - 1],
          "dim P(C) at size " + std::to_string(n) + " is " + std::to_string(dim));
    merge(part, dim == census,
          "dim and census disagree at size " + std::to_string(n));
  }
  if (part.pass) part.note = "dimensions 2, 0, 0, 3 match the census";
  return part;
}

// ---------------------------------------------------------------------------
// Criterion 5: the property suite.

Part check_eq1_duality(std::mt19937_64& rng, Grades& grades) {
  Part part;
  for (int trial = 0; trial < 100; ++trial) {
    const int k1 = 1 + static_cast<int>(rng() % 5);
    const int k2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(6 - k1));
    const auto& left = grades.on(0, k1);
    const auto& right = grades.on(k1, k2);
    const Matroid& m = left[rng() % left.size()];
    const Matroid& n = right[rng() % right.size()];
    if (!labeled_equal(dual(free_product(m, n)),
                       free_product(dual(n), dual(m)))) {
      merge(part, false, "duality law failed on trial " + std::to_string(trial));
      return part;
    }
  }
  part.note = "100 random pairs";
  return part;
}

Part check_rank_formula(int max_size, Grades& grades) {
  Part part;
  const int cap = std::min(max_size, 5);
  long long pairs = 0;
  for (int total = 0; total <= cap; ++total)
    for (int k1 = 0; k1 <= total; ++k1) {
      const int k2 = total - k1;
      for (const Matroid& m : grades.on(0, k1))
        for (const Matroid& n : grades.on(k1, k2)) {
          const Matroid f = free_product(m, n);
          ++pairs;
          const SetMask full = f.full_mask();
          for (SetMask a = 0;; ++a) {
            if (f.rank_of(a) != rank_formula(m, n, a)) {
              merge(part, false, "rank formula failed");
              return part;
            }
            if (a == full) break;
          }
        }
    }
  part.note = std::to_string(pairs) + " free products, all subsets";
  return part;
}

Part check_fiber_interval(int max_size, Grades& grades) {
  Part part;
  const int cap = std::min(max_size, 5);
  long long pairs = 0;
  for (int total = 0; total <= cap; ++total)
    for (int k1 = 0; k1 <= total; ++k1) {
      const int k2 = total - k1;
      for (const Matroid& p : grades.on(0, k1))
        for (const Matroid& q : grades.on(k1, k2)) {
          ++pairs;
          const std::vector<Matroid> fiber = fiber_interval(p, q);
          const Matroid bottom = direct_sum(p, q);
          const Matroid top = free_product(p, q);
          std::vector<Matroid> interval;
          for (const Matroid& l :
               enumerate_matroids(bottom.ground(), bottom.rank()))
            if (weak_leq(bottom, l) && weak_leq(l, top)) interval.push_back(l);
          if (fiber != interval) {
            merge(part, false, "fiber/interval mismatch");
            return part;
          }
        }
    }
  part.note = std::to_string(pairs) + " pairs, exhaustive";
  return part;
}

Part check_rota_strata4(int max_size) {
  Part part;
  const int n = std::min(max_size, 4);
  const GroundSet ground = pool_ground(0, n);
  long long checked = 0;
  for (int r = 0; r <= n; ++r) {
    const WeakPoset wp = weak_poset(ground, r);
    const int k = static_cast<int>(wp.elements.size());
    for (SetMask u = 0; u <= ground.full_mask(); ++u) {
      std::vector<int> image;
      image.reserve(static_cast<size_t>(k));
      for (const Matroid& m : wp.elements) {
        const int idx = wp.index_of(phi_u(m, u));
        if (idx < 0) {
          merge(part, false, "phi_U left the stratum");
          return part;
        }
        image.push_back(idx);
      }
      const ClosureMap phi(wp.order, image);  // validates the axioms
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          if (!wp.order.leq(a, b)) continue;
          ++checked;
          if (!check_rota(wp.order, phi, a, b).pass) {
            merge(part, false, "Rota instance failed");
            return part;
          }
        }
      if (u == ground.full_mask()) break;
    }
  }
  part.note = std::to_string(checked) + " closure instances";
  return part;
}

Part check_mobius_and_split(std::mt19937_64& rng) {
  Part part;
  const std::vector<Matroid> minima{
      parse_matroid_expr("U(1,2;a,b)+U(1,2;c,d)"),
      parse_matroid_expr("U(2,3;a,b,c)+U(1,2;d,e)")};
  long long intervals = 0, splits = 0;
  for (const Matroid& m : minima) {
    const FilterTriple ft = order_filter(m);
    const Poset& order = ft.wfilter.order;
    const int k = static_cast<int>(ft.wfilter.elements.size());

    std::vector<int> irreducible_idx;
    for (int i = 0; i < k; ++i)
      if (is_irreducible(ft.wfilter.elements[static_cast<size_t>(i)]))
        irreducible_idx.push_back(i);

    for (int x = 0; x < k; ++x)
      for (int z = 0; z < k; ++z) {
        if (!order.leq(x, z)) continue;
        ++intervals;
        if (order.mobius(x, z) != order.mobius_hall(x, z)) {
          merge(part, false, "mobius != hall");
          return part;
        }
        if (x == z) continue;
        ++splits;
        if (!check_split(order, irreducible_idx, x, z).pass) {
          merge(part, false, "split identity failed with Q = irreducibles");
          return part;
        }
        // A few random Q besides the irreducible split.
        for (int t = 0; t < 3; ++t) {
          std::vector<int> q;
          for (int i = 0; i < k; ++i)
            if (rng() & 1) q.push_back(i);
          if (!check_split(order, q, x, z).pass) {
            merge(part, false, "split identity failed on a random Q");
            return part;
          }
        }
      }
  }
  part.note = std::to_string(intervals) + " intervals, " +
              std::to_string(splits) + " split instances";
  return part;
}

Part check_coalgebra_laws(int max_size, Grades& grades) {
  Part part;
  const int cap = std::min(max_size, 4);
  using Triple = std::tuple<Matroid, Matroid, Matroid>;
  long long count = 0;
  for (int n = 0; n <= cap; ++n)
    for (const Matroid& m : grades.on(0, n)) {
      ++count;
      const TensorSum delta = coproduct(m);
      // Counit laws.
      FormalSum left, right;
      for (const auto& [key, c] : delta.terms()) {
        if (key.first.size() == 0) left.add(key.second, c);
        if (key.second.size() == 0) right.add(key.first, c);
      }
      const FormalSum id(m);
      merge(part, left == id && right == id, "counit law failed");
      if (!part.pass) return part;

      // Coassociativity.
      std::map<Triple, Rational> first, second;
      for (const auto& [key, c] : delta.terms()) {
        for (const auto& [key2, c2] : coproduct(key.first).terms()) {
          auto t = Triple{key2.first, key2.second, key.second};
          auto [it, inserted] = first.emplace(std::move(t), c * c2);
          if (!inserted) it->second += c * c2;
        }
        for (const auto& [key2, c2] : coproduct(key.second).terms()) {
          auto t = Triple{key.first, key2.first, key2.second};
          auto [it, inserted] = second.emplace(std::move(t), c * c2);
          if (!inserted) it->second += c * c2;
        }
      }
      merge(part, first == second, "coassociativity failed");
      if (!part.pass) return part;
    }
  part.note = std::to_string(count) + " matroids";
  return part;
}

Part check_factor_invariance(std::mt19937_64& rng, Grades& grades) {
  Part part;
  for (int pick = 0; pick < 20; ++pick) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto& stratum = grades.on(0, n);
    const Matroid& m = stratum[rng() % stratum.size()];

    std::vector<IsoClass> reference;
    for (const Matroid& f : factor(m)) reference.push_back(canonicalize(f));

    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Matroid shuffled = relabeled(m, perm);
      std::vector<IsoClass> word;
      for (const Matroid& f : factor(shuffled)) word.push_back(canonicalize(f));
      if (word != reference) {
        merge(part, false, "factor word changed under relabeling");
        return part;
      }
      // The factors must recompose to the relabeled matroid itself.
      Matroid recomposed;
      for (const Matroid& f : factor(shuffled))
        recomposed = free_product(recomposed, f);
      if (!labeled_equal(recomposed, shuffled)) {
        merge(part, false, "factors do not recompose");
        return part;
      }
    }
  }
  part.note = "20 matroids x 50 relabelings";
  return part;
}

Part check_property_suite(int max_size, std::uint64_t seed, Grades& grades) {
  std::mt19937_64 rng(seed);
  Part part;
  struct Sub {
    const char* name;
    Part result;
  };
  std::vector<Sub> subs;
  subs.push_back({"eq1-duality", check_eq1_duality(rng, grades)});
  subs.push_back({"rank-formula", check_rank_formula(max_size, grades)});
  subs.push_back({"fiber-interval", check_fiber_interval(max_size, grades)});
  subs.push_back({"rota-strata", check_rota_strata4(max_size)});
  subs.push_back({"mobius-split", check_mobius_and_split(rng)});
  subs.push_back({"coalgebra-laws", check_coalgebra_laws(max_size, grades)});
  subs.push_back({"factor-invariance", check_factor_invariance(rng, grades)});

  std::ostringstream note;
  for (const Sub& sub : subs) {
    merge(part, sub.result.pass,
          std::string(sub.name) + " [" + sub.result.note + "]");
    if (sub.result.pass) {
      if (note.tellp() > 0) note << ", ";
      note << sub.name;
    }
  }
  if (part.pass) part.note = "passed: " + note.str();
  return part;
}

// ---------------------------------------------------------------------------
// Criterion 6: irreducible-leading products span the full product space.

Part check_span_grade4(Grades& grades) {
  Part part;
  const GroundSet ground = pool_ground(0, 4);
  const std::vector<Matroid>& grade = grades.on(0, 4);

  std::map<Matroid, int> column;
  {
    FormalSum keyspace;  // normalizes ground order the same way sums do
    for (size_t i = 0; i < grade.size(); ++i) {
      keyspace = FormalSum(grade[i]);
      column.emplace(keyspace.terms().begin()->first, static_cast<int>(i));
    }
  }
  auto to_row = [&](const FormalSum& sum) {
    std::vector<Rational> row(grade.size(), Rational(0));
    for (const auto& [l, c] : sum.terms())
      row[static_cast<size_t>(column.at(l))] = c;
    return row;
  };

  std::vector<std::vector<Rational>> all_rows, irr_rows;
  const SetMask full = ground.full_mask();
  for (SetMask u = 1; u < full; ++u) {
    const GroundSet gu = ground.subset(u);
    const GroundSet gv = ground.subset(full & ~u);
    for (const Matroid& p : enumerate_matroids(gu)) {
      const bool leading = is_irreducible(p);
      for (const Matroid& q : enumerate_matroids(gv)) {
        auto row = to_row(dual_product(p, q));
        if (leading) irr_rows.push_back(row);
        all_rows.push_back(std::move(row));
      }
    }
  }
  const int rank_all = row_rank(std::move(all_rows));
  const int rank_irr = row_rank(std::move(irr_rows));
  merge(part, rank_all == rank_irr,
        "ranks differ: " + std::to_string(rank_irr) + " vs " +
            std::to_string(rank_all));
  if (part.pass)
    part.note = "both spans have rank " + std::to_string(rank_all) + " of " +
                std::to_string(grade.size());
  return part;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Grades grades;
  const bool golden = options.suite == "all" || options.suite == "golden";
  const bool prims = options.suite == "all" || options.suite == "primitives";
  const bool props = options.suite == "all" || options.suite == "properties";
  if (!golden && !prims && !props)
    fail(Errc::BadArgument, "unknown suite '" + options.suite + "'");

  std::vector<CheckResult> results;
  if (golden) {
    results.push_back(
        timed("criterion-1 example-5.10 w_D golden", check_example_wd));
    results.push_back(
        timed("criterion-2 example-6.3 phi golden", check_example_phi5));
  }
  if (prims) {
    results.push_back(timed("criterion-3 theorem-6.5 projection", [&] {
      return check_theorem65(options.max_size, grades);
    }));
    results.push_back(timed("criterion-4 primitive dimensions", [&] {
      return check_primitive_dimensions(grades);
    }));
  }
  if (props) {
    results.push_back(timed("criterion-5 property suite", [&] {
      return check_property_suite(options.max_size, options.seed, grades);
    }));
  }
  if (prims) {
    results.push_back(timed("criterion-6 span equality grade 4",
                            [&] { return check_span_grade4(grades); }));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace minorhopf

// Command-line front end: enumeration, factorization, Möbius documents,
// the w/r/p primitive bases, the chain-count matrix, and the verification
// suite. Exit codes: 0 success, 1 domain error, 2 verification failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "minorhopf/cache.hpp"
#include "minorhopf/coalgebra.hpp"
#include "minorhopf/expr.hpp"
#include "minorhopf/hopf.hpp"
#include "minorhopf/json_io.hpp"
#include "minorhopf/verify.hpp"
#include "minorhopf/weak_order.hpp"

namespace {

using namespace minorhopf;

struct Options {
  std::string format = "text";
  std::string cache_dir;
};

void emit(const Options& opt, const Json& doc,
          const std::function<void(const Json&)>& text_renderer) {
  if (opt.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    text_renderer(doc);
}

GroundSet default_ground(int size) {
  static const std::vector<Label> pool{"a", "b", "c", "d", "e", "f",
                                       "g", "h", "i", "j", "k", "l",
                                       "m", "n", "o", "p"};
  if (size < 0 || size > static_cast<int>(pool.size()))
    fail(Errc::GroundTooLarge, "no default labels for size " + std::to_string(size));
  return GroundSet(std::vector<Label>(pool.begin(), pool.begin() + size));
}

FormalSum basis_from_filter(const FilterTriple& ft, bool reducible_only) {
  const WeakPoset& poset = reducible_only ? ft.rfilter : ft.wfilter;
  FormalSum out;
  for (size_t i = 0; i < poset.elements.size(); ++i)
    out.add(poset.elements[i],
            to_rational(poset.order.mobius(0, static_cast<int>(i))));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"minorhopf: matroid free products, weak-order Mobius sums, "
               "and primitive bases of the minor coalgebra"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("MINORHOPF_CACHE_DIR")) opt.cache_dir = env;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", opt.cache_dir,
                 "Directory for enumeration cache files (also via "
                 "MINORHOPF_CACHE_DIR); caching is an optimization only");

  // --- enumerate -----------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "List matroids on a ground set");
  int size = 0;
  int rank = -1;
  std::vector<std::string> labels;
  enumerate->add_option("--size", size, "Ground-set size (default labels a,b,...)");
  enumerate->add_option("--labels", labels, "Explicit labels")->delimiter(',');
  enumerate->add_option("--rank", rank, "Restrict to one rank");
  enumerate->callback([&] {
    const GroundSet ground =
        labels.empty() ? default_ground(size) : GroundSet(labels);
    Cache cache(opt.cache_dir);
    std::vector<Matroid> out;
    if (rank >= 0) {
      out = cache.stratum(ground, rank);
    } else {
      for (int r = 0; r <= ground.size(); ++r) {
        auto s = cache.stratum(ground, r);
        out.insert(out.end(), s.begin(), s.end());
      }
    }
    Json ms = Json::array();
    for (const Matroid& m : out) ms.push_back(matroid_to_json(m));
    const Json doc{{"ground", ground.labels()},
                   {"count", out.size()},
                   {"matroids", std::move(ms)}};
    emit(opt, doc, [&](const Json&) {
      std::cout << "count " << out.size() << "\n";
      for (size_t i = 0; i < out.size(); ++i)
        std::cout << i << ": " << matroid_to_text(out[i]) << "\n";
    });
  });

  // --- factor / irreducible ------------------------------------------------
  std::string factor_expr;
  auto* factor_cmd = app.add_subcommand("factor", "Irreducible factorization under free product");
  factor_cmd->add_option("expr", factor_expr, "Matroid expression")->required();
  factor_cmd->callback([&] {
    const Matroid m = parse_matroid_expr(factor_expr);
    const std::vector<Matroid> factors = factor(m);
    Json fs = Json::array(), cs = Json::array();
    for (const Matroid& f : factors) {
      fs.push_back(matroid_to_json(f));
      cs.push_back(matroid_to_json(canonicalize(f).canonical()));
    }
    const Json doc{{"matroid", matroid_to_json(m)},
                   {"factors", std::move(fs)},
                   {"classes", std::move(cs)}};
    emit(opt, doc, [&](const Json&) {
      for (size_t i = 0; i < factors.size(); ++i)
        std::cout << i << ": " << matroid_to_text(factors[i]) << "\n";
    });
  });

  std::string irr_expr;
  auto* irr_cmd = app.add_subcommand("irreducible", "Test irreducibility under free product");
  irr_cmd->add_option("expr", irr_expr, "Matroid expression")->required();
  irr_cmd->callback([&] {
    const Matroid m = parse_matroid_expr(irr_expr);
    const bool irr = is_irreducible(m);
    const Json doc{{"matroid", matroid_to_json(m)}, {"irreducible", irr}};
    emit(opt, doc,
         [&](const Json&) { std::cout << (irr ? "true" : "false") << "\n"; });
  });

  // --- mobius ----------------------------------------------------------------
  std::string mobius_expr;
  std::string filter_kind = "weak";
  auto* mobius_cmd = app.add_subcommand(
      "mobius", "Weak-order filter of M with Mobius values from M");
  mobius_cmd->add_option("expr", mobius_expr, "Matroid expression")->required();
  mobius_cmd->add_option("--filter", filter_kind, "weak (W_M) or reducible (R_M)")
      ->check(CLI::IsMember({"weak", "reducible"}));
  mobius_cmd->callback([&] {
    const Matroid m = parse_matroid_expr(mobius_expr);
    Cache cache(opt.cache_dir);
    const FilterTriple ft = cache.filter(m);
    const WeakPoset& poset =
        filter_kind == "reducible" ? ft.rfilter : ft.wfilter;
    Json doc = filter_to_json(poset);
    doc["minimum"] = matroid_to_json(m);
    doc["filter"] = filter_kind;
    emit(opt, doc, [&](const Json&) {
      for (size_t i = 0; i < poset.elements.size(); ++i)
        std::cout << i << ": mu=" << poset.order.mobius(0, static_cast<int>(i))
                  << "  " << matroid_to_text(poset.elements[i]) << "\n";
      std::cout << "hasse:";
      for (auto [x, y] : poset.order.hasse_edges())
        std::cout << " " << x << "<" << y;
      std::cout << "\n";
    });
  });

  // --- primitive ---------------------------------------------------------
  std::string prim_expr;
  std::string basis = "w";
  auto* prim_cmd =
      app.add_subcommand("primitive", "The basis elements w_M, r_M or p_M");
  prim_cmd->add_option("expr", prim_expr, "Matroid expression")->required();
  prim_cmd->add_option("--basis", basis, "w, r or p")
      ->check(CLI::IsMember({"w", "r", "p"}));
  prim_cmd->callback([&] {
    const Matroid m = parse_matroid_expr(prim_expr);
    Json doc{{"basis", basis}, {"matroid", matroid_to_json(m)}};
    if (basis == "p") {
      const IsoSum p = p_basis(m);
      doc["terms"] = iso_sum_to_json(p);
      doc["primitive"] = is_irreducible(m);
      emit(opt, doc, [&](const Json&) {
        for (const auto& [c, k] : p.terms())
          std::cout << format_rational(k) << "  "
                    << matroid_to_text(c.canonical()) << "\n";
      });
      return;
    }
    Cache cache(opt.cache_dir);
    const FormalSum x = basis_from_filter(cache.filter(m), basis == "r");
    doc["terms"] = formal_sum_to_json(x);
    doc["primitive"] = is_primitive(x);
    emit(opt, doc, [&](const Json&) {
      for (const auto& [n, c] : x.terms())
        std::cout << format_rational(c) << "  " << matroid_to_text(n) << "\n";
      std::cout << "primitive: " << (is_primitive(x) ? "true" : "false")
                << "\n";
    });
  });

  // --- phi -----------------------------------------------------------------
  std::string phi_expr;
  auto* phi_cmd = app.add_subcommand(
      "phi", "Chain-count matrix of W_M classes and its exact inverse");
  phi_cmd->add_option("expr", phi_expr, "Matroid expression")->required();
  phi_cmd->callback([&] {
    const Matroid m = parse_matroid_expr(phi_expr);
    const PhiResult pr = phi_matrix(m);
    const Json doc = phi_to_json(pr);
    emit(opt, doc, [&](const Json& d) {
      for (size_t i = 0; i < pr.classes.size(); ++i)
        std::cout << "e" << i + 1 << ": "
                  << matroid_to_text(pr.classes[i].canonical()) << "\n";
      for (const char* key : {"phi", "phi_inv"}) {
        std::cout << key << ":\n";
        for (const Json& row : d.at(key)) {
          for (const Json& entry : row)
            std::cout << "  " << entry.get<std::string>();
          std::cout << "\n";
        }
      }
    });
  });

  // --- verify -----------------------------------------------------------
  VerifyOptions vopt;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--suite", vopt.suite, "all, golden, primitives or properties")
      ->check(CLI::IsMember({"all", "golden", "primitives", "properties"}));
  verify_cmd->add_option("--max-size", vopt.max_size,
                         "Cap for the exhaustive sweeps");
  verify_cmd->add_option("--seed", vopt.seed, "Seed for the sampled checks");
  verify_cmd->callback([&] {
    const std::vector<CheckResult> results = run_verification(vopt);
    Json checks = Json::array();
    for (const CheckResult& r : results)
      checks.push_back(Json{{"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
    const bool ok = all_passed(results);
    const Json doc{{"pass", ok}, {"checks", std::move(checks)}};
    emit(opt, doc, [&](const Json&) {
      for (const CheckResult& r : results) {
        std::printf("[%s] %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : ": ",
                    r.detail.c_str());
      }
    });
    if (!ok) throw CLI::RuntimeError(2);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const minorhopf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

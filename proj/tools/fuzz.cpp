#include "fuzz.hpp"

#include <ostream>
#include <sstream>

#include "oracle.hpp"
#include "rrgraph/io.hpp"
#include "rrgraph/lattice.hpp"
#include "rrgraph/linsys.hpp"
#include "rrgraph/reduction.hpp"

namespace rrgraph::fuzz {

namespace {

const char* profile_name(Profile p) { return p == Profile::integer ? "int" : "rational"; }

std::string genus_bound_violation(const WeightedGraph& g, const ReductionResult& r) {
  Rational off_base = 0;
  for (std::size_t v = 1; v < g.vertex_count(); ++v) off_base += r.reduced[v];
  const Rational gen = genus(g);
  if (off_base > gen) return "reduced divisor exceeds genus off v0";
  if (off_base == gen) {
    std::vector<std::size_t> placed{0};
    for (auto v : r.burn_order) {
      Rational s = -1;
      for (auto u : placed) s += g.weight(u, v);
      if (r.reduced[v] != s) return "genus equality without the permutation equality";
      placed.push_back(v);
    }
  }
  return {};
}

std::string check_two_conditions(const WeightedGraph& g, const Divisor& d, const NZeroSet& n0) {
  const bool nonempty = linear_system_nonempty(g, d);
  if (divisor_degree(d) > genus(g) - 1 && !nonempty) return "deg D > g-1 but |D| empty";
  auto witness = dominating_witness(g, d);
  if (nonempty) return witness ? "witness returned for nonempty |D|" : "";
  if (!witness) return "no witness for empty |D|";
  if (!dominated_by(d, *witness)) return "witness does not dominate D";
  if (divisor_degree(*witness) != genus(g) - 1) return "witness degree is not g-1";
  if (!n0.contains(reduce(g, *witness).reduced)) return "witness does not reduce into N0";
  return {};
}

bool small(const WeightedGraph& g, std::size_t max_n) { return g.n() <= max_n; }

}  // namespace

std::vector<Property> properties(Profile profile) {
  auto always = [](const WeightedGraph&, const Divisor&) { return true; };
  std::vector<Property> ps;

  ps.push_back({"rr_residual",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                  auto r = rr_residual(g, d);
                  return r == 0 ? "" : "residual " + format_rational(r);
                },
                always});

  ps.push_back({"dim_l_bounds",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                  auto l = dim_l(g, d);
                  if (l < 0) return "negative dimension";
                  if (l < divisor_degree(d) - genus(g) + 1) return "dimension below deg D - g + 1";
                  if ((l == 0) == linear_system_nonempty(g, d)) return "l(D) = 0 disagrees with emptiness";
                  return {};
                },
                always});

  ps.push_back({"reduce_idempotent",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                  auto r = reduce(g, d);
                  auto again = reduce(g, r.reduced);
                  if (again.reduced != r.reduced || !again.certificate.is_zero()) return "second reduction moved";
                  if (apply_firing(g, d, r.certificate) != r.reduced) return "certificate does not reproduce output";
                  return {};
                },
                always});

  ps.push_back({"reduce_class_invariant",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng& rng) -> std::string {
                  auto shifted = d + principal_divisor(g, gen::random_firing(rng, g.n(), 3));
                  auto a = reduce(g, d), b = reduce(g, shifted);
                  if (a.reduced != b.reduced) return "equivalent divisors reduce differently";
                  if (!is_equivalent(g, b.reduced, shifted)) return "output not equivalent to input";
                  return {};
                },
                always});

  ps.push_back({"subset_oracle",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                  if (!oracle::subset_reduced_check(g, reduce(g, d).reduced)) return "reduce output fails subset check";
                  if (is_reduced(g, d) != oracle::subset_reduced_check(g, d)) return "is_reduced disagrees with subset check";
                  return {};
                },
                [](const WeightedGraph& g, const Divisor&) { return small(g, 5); }});

  ps.push_back({"genus_bound",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                  for (const auto& x : {d, canonical_divisor(g) - d})
                    if (auto why = genus_bound_violation(g, reduce(g, x)); !why.empty()) return why;
                  return {};
                },
                always});

  ps.push_back({"k_symmetry",
                [](const WeightedGraph& g, const Divisor&, gen::Rng&) -> std::string {
                  return k_symmetry_check(g) ? "" : "K - N0 left N0";
                },
                always});

  ps.push_back({"two_conditions",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                  auto n0 = enumerate_n0(g);
                  for (const auto& x : {d, canonical_divisor(g) - d})
                    if (auto why = check_two_conditions(g, x, n0); !why.empty()) return why;
                  return {};
                },
                always});

  ps.push_back({"n0_oracle",
                [](const WeightedGraph& g, const Divisor&, gen::Rng&) -> std::string {
                  auto n0 = enumerate_n0(g);
                  auto ref = oracle::n0_by_permutations(g);
                  if (n0.size() != ref.size()) return "N0 size differs from permutation oracle";
                  for (const auto& x : ref)
                    if (!n0.contains(x)) return "N0 misses " + format_divisor(x);
                  std::size_t bound = 1;
                  for (std::size_t k = 2; k <= g.n(); ++k) bound *= k;
                  if (n0.size() > bound) return "N0 larger than n!";
                  return {};
                },
                [](const WeightedGraph& g, const Divisor&) { return small(g, 5); }});

  ps.push_back({"box_oracle",
                [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                  auto a = dim_l(g, d), b = oracle::dim_l_box_oracle(g, d, 6);
                  return a == b ? "" : "dim_l " + format_rational(a) + " vs oracle " + format_rational(b);
                },
                [](const WeightedGraph& g, const Divisor&) { return small(g, 3); }});

  if (profile == Profile::integer) {
    ps.push_back({"bn_rank",
                  [](const WeightedGraph& g, const Divisor& d, gen::Rng&) -> std::string {
                    oracle::IntegerInstance inst(g, d);
                    auto l = dim_l(g, d);
                    auto r = oracle::bn_rank(inst);
                    if (l != r + 1) return "dim_l " + format_rational(l) + " vs bn_rank+1 " + std::to_string(r + 1);
                    bool nonempty = linear_system_nonempty(g, d);
                    if (nonempty != oracle::integer_nonempty(inst)) return "emptiness differs from integer reduction";
                    if (nonempty != oracle::integer_nonempty_brute(inst)) return "emptiness differs from exhaustive search";
                    return {};
                  },
                  [](const WeightedGraph& g, const Divisor& d) {
                    return small(g, 5) && divisor_degree(d) <= 20;
                  }});
  }
  return ps;
}

Instance make_instance(const Options& opts, std::size_t index) {
  gen::Rng rng(opts.seed + index);
  auto shape = opts.profile == Profile::integer ? gen::integer_shape() : gen::rational_shape();
  shape.max_vertices = opts.max_n + 1;
  auto g = gen::random_graph(rng, shape);
  auto d = gen::random_divisor(rng, g.vertex_count(), shape);
  return {std::move(g), std::move(d)};
}

namespace {

gen::Rng property_rng(const Options& opts, std::size_t index, std::size_t property) {
  return gen::Rng((opts.seed + index) * 0x9E3779B97F4A7C15ULL + property + 1);
}

std::string evaluate(const Property& p, const WeightedGraph& g, const Divisor& d, gen::Rng rng) {
  try {
    return p.check(g, d, rng);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

struct CaseResult {
  std::size_t vertices = 0;
  std::vector<int> status;  // per property: 1 pass, 0 fail, -1 not applicable
  std::vector<std::string> reasons;
};

// Greedy shrink: zero divisor entries and drop edges while the failure persists.
Instance shrink(const Property& p, Instance inst, const gen::Rng& rng) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t v = 0; v < inst.divisor.size() && !progress; ++v) {
      if (inst.divisor[v] == 0) continue;
      auto d = inst.divisor;
      d[v] = 0;
      if (!evaluate(p, inst.graph, d, rng).empty()) {
        inst.divisor = std::move(d);
        progress = true;
      }
    }
    auto edges = inst.graph.edges();
    for (std::size_t k = 0; k < edges.size() && !progress; ++k) {
      auto rest = edges;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      try {
        auto g = WeightedGraph::from_edges(inst.graph.vertex_count(), rest);
        if (!evaluate(p, g, inst.divisor, rng).empty()) {
          inst.graph = std::move(g);
          progress = true;
        }
      } catch (const GraphError&) {
      }
    }
  }
  return inst;
}

}  // namespace

int run(const Options& opts, std::ostream& out) {
  if (opts.max_n < 1) throw std::invalid_argument("max-n must be at least 1");
  const auto props = properties(opts.profile);
  std::vector<CaseResult> results(opts.count);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < opts.count; ++i) {
    auto inst = make_instance(opts, i);
    auto& r = results[i];
    r.vertices = inst.graph.vertex_count();
    r.status.assign(props.size(), -1);
    r.reasons.assign(props.size(), "");
    for (std::size_t k = 0; k < props.size(); ++k) {
      if (!props[k].applies(inst.graph, inst.divisor)) continue;
      r.reasons[k] = evaluate(props[k], inst.graph, inst.divisor, property_rng(opts, i, k));
      r.status[k] = r.reasons[k].empty() ? 1 : 0;
    }
  }

  out << "fuzz seed=" << opts.seed << " count=" << opts.count << " profile=" << profile_name(opts.profile)
      << " max-n=" << opts.max_n << "\n";

  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  for (std::size_t i = 0; i < opts.count; ++i) {
    const auto& r = results[i];
    std::ostringstream line;
    bool ok = true;
    for (std::size_t k = 0; k < props.size(); ++k) {
      if (r.status[k] != 0) continue;
      ok = false;
      line << " FAIL " << props[k].name << ": " << r.reasons[k] << ";";
      if (!first_failure) first_failure = {i, k};
    }
    out << "case " << i << " vertices=" << r.vertices << (ok ? " pass" : line.str()) << "\n";
    if (!ok)
      out << "replay case " << i << ": rrgraph fuzz --seed " << opts.seed + i << " --count 1 --profile "
          << profile_name(opts.profile) << " --max-n " << opts.max_n << "\n";
  }

  for (std::size_t k = 0; k < props.size(); ++k) {
    std::size_t ran = 0, passed = 0;
    for (const auto& r : results) {
      if (r.status[k] < 0) continue;
      ++ran;
      passed += r.status[k] == 1;
    }
    out << "property " << props[k].name << " " << passed << "/" << ran << (passed == ran ? " pass" : " FAIL")
        << "\n";
  }

  if (!first_failure) {
    out << "result pass\n";
    return 0;
  }

  auto [i, k] = *first_failure;
  auto minimal = shrink(props[k], make_instance(opts, i), property_rng(opts, i, k));
  out << "result FAIL\n";
  out << "minimal failing instance (case " << i << ", property " << props[k].name << ")\n";
  out << "--- graph file\n" << io::format_graph(minimal.graph);
  out << "--- divisor file\n" << io::format_divisor_file(minimal.divisor);
  return 1;
}

}  // namespace rrgraph::fuzz

#include "commands.hpp"

#include <ostream>

#include "rrgraph/io.hpp"
#include "rrgraph/lattice.hpp"
#include "rrgraph/linsys.hpp"
#include "rrgraph/reduction.hpp"

namespace rrgraph::cli {

namespace {

std::string format_order(const std::vector<std::size_t>& order) {
  std::string s = "(";
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(order[k]);
  }
  return s + ")";
}

}  // namespace

int cmd_info(const std::string& graph_path, std::ostream& out) {
  auto g = io::read_graph_file(graph_path);
  out << "vertices " << g.vertex_count() << "\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "degree v" << v << " " << format_rational(vertex_degree(g, v)) << "\n";
  out << "genus " << format_rational(genus(g)) << "\n";
  out << "canonical " << format_divisor(canonical_divisor(g)) << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& graph_path, const std::string& divisor_path, bool self_check, std::ostream& out) {
  auto g = io::read_graph_file(graph_path);
  auto d = io::read_divisor_file(divisor_path, g.vertex_count());
  auto r = reduce(g, d);
  out << "input " << format_divisor(d) << "\n";
  out << "reduced " << format_divisor(r.reduced) << "\n";
  out << "certificate " << format_firing(r.certificate) << "\n";
  out << "burn_order " << format_order(r.burn_order) << "\n";
  out << "nonempty " << (r.reduced[0] > -1 ? "yes" : "no") << "\n";
  if (!self_check) return kExitOk;
  bool ok = is_reduced(g, r.reduced) && apply_firing(g, d, r.certificate) == r.reduced &&
            is_equivalent(g, d, r.reduced).has_value();
  out << "self_check " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_dim(const std::string& graph_path, const std::string& divisor_path, bool self_check, std::ostream& out) {
  auto g = io::read_graph_file(graph_path);
  auto d = io::read_divisor_file(divisor_path, g.vertex_count());
  auto n0 = enumerate_n0(g);
  auto k = canonical_divisor(g);
  auto dim = dimension(g, d, n0);
  auto dual = dimension(g, k - d, n0);
  Rational residual = dim.value - dual.value - (divisor_degree(d) + 1 - genus(g));

  out << "degree " << format_rational(divisor_degree(d)) << "\n";
  out << "genus " << format_rational(genus(g)) << "\n";
  out << "l(D) " << format_rational(dim.value) << "\n";
  out << "l(K-D) " << format_rational(dual.value) << "\n";
  out << "rr_residual " << format_rational(residual) << "\n";
  out << "witness " << format_divisor(dim.witness) << "\n";

  bool ok = residual == 0;
  if (self_check) {
    bool witness_ok = divisor_degree(dim.witness) == genus(g) - 1 &&
                      n0.contains(reduce(g, dim.witness).reduced) &&
                      divisor_degree(positive_part(d - dim.witness)) == dim.value;
    out << "self_check " << (witness_ok ? "pass" : "FAIL") << "\n";
    ok = ok && witness_ok;
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_nset(const std::string& graph_path, std::ostream& out) {
  auto g = io::read_graph_file(graph_path);
  auto n0 = enumerate_n0(g);
  const Rational target = genus(g) - 1;
  bool ok = true;
  for (const auto& e : n0.elements) {
    bool valid = is_reduced(g, e.divisor) && !linear_system_nonempty(g, e.divisor) &&
                 divisor_degree(e.divisor) == target;
    ok = ok && valid;
    out << "N0 " << format_divisor(e.divisor) << " order " << format_order(e.witness_order)
        << (valid ? "" : " INVALID") << "\n";
  }
  Integer bound = 1;
  for (std::size_t k = 2; k <= g.n(); ++k) bound *= static_cast<unsigned long>(k);
  out << "count " << n0.size() << "\n";
  out << "bound " << bound.get_str() << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_fuzz(const fuzz::Options& opts, std::ostream& out) { return fuzz::run(opts, out); }

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace rrgraph::cli

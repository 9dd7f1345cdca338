#include "rrgraph/graph.hpp"

#include <numeric>

namespace rrgraph {

namespace {

void check_index(const WeightedGraph& g, std::size_t j) {
  if (j >= g.vertex_count())
    throw std::out_of_range("vertex index " + std::to_string(j) + " out of range for " +
                            std::to_string(g.vertex_count()) + " vertices");
}

void check_size(const Divisor& a, const Divisor& b) {
  if (a.size() != b.size()) throw std::invalid_argument("divisor length mismatch");
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Rational> weights)
    : vertex_count_(vertex_count), weights_(std::move(weights)), degrees_(vertex_count) {
  if (vertex_count_ < 2) throw GraphError("graph needs at least 2 vertices");
  if (weights_.size() != vertex_count_ * vertex_count_)
    throw GraphError("weight matrix has wrong size");

  for (std::size_t i = 0; i < vertex_count_; ++i) {
    if (weight(i, i) != 0) throw GraphError("loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < vertex_count_; ++j) {
      if (weight(i, j) < 0) throw GraphError("negative weight");
      if (weight(i, j) != weight(j, i)) throw GraphError("weight matrix not symmetric");
      degrees_[j] += weight(i, j);
    }
  }

  std::vector<bool> seen(vertex_count_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      if (!seen[v] && weight(u, v) > 0) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != vertex_count_) throw GraphError("graph not connected");
}

WeightedGraph WeightedGraph::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  std::vector<Rational> w(vertex_count * vertex_count);
  for (const auto& e : edges) {
    if (e.i >= vertex_count || e.j >= vertex_count) throw GraphError("edge endpoint out of range");
    if (e.i == e.j) throw GraphError("loop at vertex " + std::to_string(e.i));
    w[e.i * vertex_count + e.j] += e.w;
    w[e.j * vertex_count + e.i] += e.w;
  }
  return WeightedGraph(vertex_count, std::move(w));
}

std::vector<WeightedGraph::Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertex_count_; ++i)
    for (std::size_t j = i + 1; j < vertex_count_; ++j)
      if (weight(i, j) > 0) out.push_back({i, j, weight(i, j)});
  return out;
}

Divisor Divisor::point(std::size_t size, std::size_t v, const Rational& amount) {
  Divisor d(size);
  d[v] = amount;
  return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  check_size(*this, o);
  for (std::size_t i = 0; i < size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  check_size(*this, o);
  for (std::size_t i = 0; i < size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = -values_[i];
  return out;
}

bool dominated_by(const Divisor& a, const Divisor& b) {
  check_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool FiringVector::is_zero() const {
  for (const auto& x : entries)
    if (x != 0) return false;
  return true;
}

FiringVector& FiringVector::operator+=(const FiringVector& o) {
  if (size() != o.size()) throw std::invalid_argument("firing vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries[i] += o.entries[i];
  return *this;
}

FiringVector FiringVector::operator-() const {
  FiringVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = -entries[i];
  return out;
}

Rational vertex_degree(const WeightedGraph& g, std::size_t j) {
  check_index(g, j);
  return g.degree(j);
}

Rational genus(const WeightedGraph& g) {
  Rational total = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) total += g.weight(i, j);
  return total - static_cast<long>(g.n());
}

Rational divisor_degree(const Divisor& d) {
  return std::accumulate(d.values().begin(), d.values().end(), Rational(0));
}

Divisor canonical_divisor(const WeightedGraph& g) {
  Divisor k(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 2;
  return k;
}

Divisor principal_generator(const WeightedGraph& g, std::size_t j) {
  check_index(g, j);
  Divisor h(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) h[i] = i == j ? g.degree(j) : Rational(-g.weight(i, j));
  return h;
}

Divisor principal_divisor(const WeightedGraph& g, const FiringVector& c) {
  if (c.size() != g.n())
    throw std::invalid_argument("firing vector has length " + std::to_string(c.size()) +
                                ", expected " + std::to_string(g.n()));
  Divisor p(g.vertex_count());
  for (std::size_t j = 1; j <= g.n(); ++j) {
    const Integer& cj = c[j - 1];
    if (cj == 0) continue;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      if (i == j)
        p[i] += cj * g.degree(j);
      else if (g.weight(i, j) != 0)
        p[i] -= cj * g.weight(i, j);
    }
  }
  return p;
}

Divisor apply_firing(const WeightedGraph& g, const Divisor& d, const FiringVector& c) {
  if (d.size() != g.vertex_count()) throw std::invalid_argument("divisor length mismatch");
  return d - principal_divisor(g, c);
}

Divisor positive_part(const Divisor& d) {
  Divisor out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] > 0 ? d[i] : Rational(0);
  return out;
}

Divisor negative_part(const Divisor& d) {
  Divisor out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i] < 0 ? d[i] : Rational(0);
  return out;
}

std::string format_divisor(const Divisor& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(d[i]);
  }
  return s + ")";
}

std::string format_firing(const FiringVector& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += c[i].get_str();
  }
  return s + ")";
}

}  // namespace rrgraph

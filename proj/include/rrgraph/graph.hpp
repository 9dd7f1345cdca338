#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrgraph/rational.hpp"

namespace rrgraph {

/// Raised when a weight matrix violates the graph invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Connected, loopless graph on vertices v0..vn with symmetric nonnegative
/// rational weights. v0 is the base vertex of every reduction.
class WeightedGraph {
 public:
  /// `weights` is (vertex_count x vertex_count), row-major.
  WeightedGraph(std::size_t vertex_count, std::vector<Rational> weights);

  /// Builds from an edge list (i, j, w); missing pairs have weight 0.
  struct Edge {
    std::size_t i, j;
    Rational w;
  };
  static WeightedGraph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Number of non-base vertices, i.e. the length of a firing vector.
  std::size_t n() const { return vertex_count_ - 1; }

  const Rational& weight(std::size_t i, std::size_t j) const {
    return weights_[i * vertex_count_ + j];
  }
  const Rational& degree(std::size_t j) const { return degrees_[j]; }

  /// Edges with positive weight, i < j, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  std::size_t vertex_count_;
  std::vector<Rational> weights_;
  std::vector<Rational> degrees_;
};

/// Rational-valued function on the vertices of a graph.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t size) : values_(size) {}
  explicit Divisor(std::vector<Rational> values) : values_(std::move(values)) {}
  Divisor(std::initializer_list<Rational> values) : values_(values) {}

  static Divisor zero(std::size_t size) { return Divisor(size); }
  static Divisor point(std::size_t size, std::size_t v, const Rational& amount = 1);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t v) const { return values_[v]; }
  Rational& operator[](std::size_t v) { return values_[v]; }
  std::span<const Rational> values() const { return values_; }

  /// Coordinates on V0 = V \ {v0}.
  std::span<const Rational> phi() const { return std::span(values_).subspan(1); }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  Divisor operator-() const;

  bool operator==(const Divisor&) const = default;
  /// Lexicographic, for use as an ordered-set key.
  bool operator<(const Divisor& o) const { return values_ < o.values_; }

 private:
  std::vector<Rational> values_;
};

/// Pointwise a <= b.
bool dominated_by(const Divisor& a, const Divisor& b);

/// Integer vector indexed by V0; encodes the principal divisor sum_j c_j H_j.
struct FiringVector {
  std::vector<Integer> entries;

  FiringVector() = default;
  explicit FiringVector(std::size_t n) : entries(n) {}
  explicit FiringVector(std::vector<Integer> e) : entries(std::move(e)) {}
  FiringVector(std::initializer_list<Integer> e) : entries(e) {}

  std::size_t size() const { return entries.size(); }
  const Integer& operator[](std::size_t i) const { return entries[i]; }
  Integer& operator[](std::size_t i) { return entries[i]; }
  bool is_zero() const;

  FiringVector& operator+=(const FiringVector& o);
  friend FiringVector operator+(FiringVector a, const FiringVector& b) { return a += b; }
  FiringVector operator-() const;
  bool operator==(const FiringVector&) const = default;
};

Rational vertex_degree(const WeightedGraph& g, std::size_t j);

/// sum_{i<j} w_ij - n. May be negative or fractional.
Rational genus(const WeightedGraph& g);

Rational divisor_degree(const Divisor& d);

/// K(v) = deg(v) - 2.
Divisor canonical_divisor(const WeightedGraph& g);

/// H_j: deg(v_j) at v_j, -w_ij elsewhere.
Divisor principal_generator(const WeightedGraph& g, std::size_t j);

/// D - sum_{j=1..n} c_j H_j. `c` is indexed by V0.
Divisor apply_firing(const WeightedGraph& g, const Divisor& d, const FiringVector& c);

/// sum_{j=1..n} c_j H_j.
Divisor principal_divisor(const WeightedGraph& g, const FiringVector& c);

Divisor positive_part(const Divisor& d);
Divisor negative_part(const Divisor& d);

/// "(a, b, c)" with canonical rationals.
std::string format_divisor(const Divisor& d);
std::string format_firing(const FiringVector& c);

}  // namespace rrgraph

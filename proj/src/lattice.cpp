#include "rrgraph/lattice.hpp"

namespace rrgraph {

ReducedLaplacian::ReducedLaplacian(const WeightedGraph& g) : n_(g.n()), entries_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      entries_[i * n_ + j] = i == j ? g.degree(i + 1) : Rational(-g.weight(i + 1, j + 1));
}

RationalVector ReducedLaplacian::apply(std::span<const Rational> x) const {
  if (x.size() != n_) throw std::invalid_argument("vector length mismatch");
  RationalVector y(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

RationalVector ReducedLaplacian::apply(const FiringVector& c) const {
  RationalVector x(c.entries.begin(), c.entries.end());
  return apply(x);
}

ReducedLaplacian reduced_laplacian(const WeightedGraph& g) { return ReducedLaplacian(g); }

RationalVector solve(const ReducedLaplacian& l, std::span<const Rational> y) {
  const std::size_t n = l.size();
  if (y.size() != n) throw std::invalid_argument("right-hand side length mismatch");

  // Augmented matrix [L | y].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = l(i, j);
    a[i][n] = y[i];
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("reduced Laplacian is singular (graph not connected)");
    std::swap(a[pivot], a[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[row][k] -= factor * a[col][k];
    }
  }

  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

std::optional<FiringVector> is_equivalent(const WeightedGraph& g, const Divisor& d, const Divisor& d2) {
  if (d.size() != g.vertex_count() || d2.size() != g.vertex_count())
    throw std::invalid_argument("divisor length mismatch");
  if (divisor_degree(d) != divisor_degree(d2)) return std::nullopt;
  Divisor diff = d - d2;
  auto x = solve(reduced_laplacian(g), diff.phi());
  FiringVector c(g.n());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_integer(x[i])) return std::nullopt;
    c[i] = x[i].get_num();
  }
  return c;
}

bool in_A(const WeightedGraph& g, std::span<const Rational> d, const FiringVector& c) {
  if (d.size() != g.n() || c.size() != g.n()) throw std::invalid_argument("vector length mismatch");
  for (const auto& x : c.entries)
    if (x < 0) return false;
  auto lc = reduced_laplacian(g).apply(c);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] - lc[i] <= 0) return false;
  return true;
}

RationalVector upper_bound_A(const WeightedGraph& g, std::span<const Rational> d) {
  if (d.size() != g.n()) throw std::invalid_argument("vector length mismatch");
  for (const auto& x : d)
    if (x <= 0) throw std::invalid_argument("upper_bound_A requires d > 0");
  return solve(reduced_laplacian(g), d);
}

FiringVector phase1_offset(const WeightedGraph& g, std::span<const Rational> z) {
  if (z.size() != g.n()) throw std::invalid_argument("vector length mismatch");
  RationalVector rhs(z.begin(), z.end());
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    if (rhs[j] < 0) throw std::invalid_argument("phase1_offset requires z >= 0");
    rhs[j] += g.degree(j + 1);
  }
  auto q = solve(reduced_laplacian(g), rhs);
  FiringVector c(g.n());
  for (std::size_t j = 0; j < q.size(); ++j) c[j] = ceil(q[j]);
  return c;
}

}  // namespace rrgraph

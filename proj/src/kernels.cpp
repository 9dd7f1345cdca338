#include "rrgraph/kernels.hpp"

#include <stdexcept>

#include <omp.h>

namespace rrgraph::kernels {

bool BoxProblem::empty() const {
  for (std::size_t j = 0; j < n; ++j)
    if (lo[j] > hi[j]) return true;
  return false;
}

void BoxProblem::check_range() const {
  if (y.size() != n + 1 || m.size() != (n + 1) * n || lo.size() != n || hi.size() != n)
    throw std::invalid_argument("box problem has inconsistent dimensions");
  auto ok = [](std::int64_t x) { return x > -kMaxMagnitude && x < kMaxMagnitude; };
  for (auto x : y)
    if (!ok(x)) throw std::overflow_error("box problem target out of kernel range");
  for (auto x : m)
    if (!ok(x)) throw std::overflow_error("box problem matrix out of kernel range");
  for (std::size_t j = 0; j < n; ++j)
    if (!ok(lo[j]) || !ok(hi[j])) throw std::overflow_error("box problem bounds out of kernel range");
}

std::int64_t objective(const BoxProblem& p, const std::vector<std::int64_t>& c) {
  std::int64_t f = 0;
  for (std::size_t v = 0; v <= p.n; ++v) {
    std::int64_t x = p.y[v];
    for (std::size_t j = 0; j < p.n; ++j) x -= p.at(v, j) * c[j];
    if (x > 0) f += x;
  }
  return f;
}

std::optional<BoxMin> box_min_serial(const BoxProblem& p) {
  p.check_range();
  if (p.empty()) return std::nullopt;
  std::vector<std::int64_t> c = p.lo;
  std::optional<BoxMin> best;
  for (;;) {
    auto f = objective(p, c);
    if (!best || f < best->value) best = BoxMin{f, c};
    // Odometer, last coordinate fastest.
    std::size_t j = p.n;
    while (j > 0) {
      --j;
      if (c[j] < p.hi[j]) {
        ++c[j];
        break;
      }
      c[j] = p.lo[j];
      if (j == 0) return best;
    }
    if (p.n == 0) return best;
  }
}

namespace {

struct LineScan {
  std::int64_t value;
  std::int64_t t;
};

// Minimum over t in [lo, hi] of sum_v max(a_v - col_v * t, 0).
LineScan line_min(const std::vector<std::int64_t>& a, const BoxProblem& p, std::size_t last,
                  std::int64_t lo, std::int64_t hi) {
  auto f = [&](std::int64_t t) {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < a.size(); ++v) {
      std::int64_t x = a[v] - p.at(v, last) * t;
      if (x > 0) s += x;
    }
    return s;
  };
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (f(mid + 1) - f(mid) >= 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  return {f(lo), lo};
}

}  // namespace

std::optional<BoxMin> box_min_parallel(const BoxProblem& p) {
  p.check_range();
  if (p.empty()) return std::nullopt;
  if (p.n == 0) return BoxMin{objective(p, {}), {}};

  const std::size_t last = p.n - 1;
  std::vector<std::int64_t> width(last);
  std::int64_t outer = 1;
  for (std::size_t j = 0; j < last; ++j) {
    width[j] = p.hi[j] - p.lo[j] + 1;
    if (outer > (std::int64_t{1} << 62) / width[j]) throw std::length_error("search box too large");
    outer *= width[j];
  }

  std::int64_t best_value = 0, best_index = -1, best_t = 0;

#pragma omp parallel if (outer > 64)
  {
    std::int64_t value = 0, index = -1, tbest = 0;
    std::vector<std::int64_t> a(p.n + 1);
    std::vector<std::int64_t> c(last);

#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < outer; ++k) {
      std::int64_t rem = k;
      for (std::size_t j = last; j-- > 0;) {
        c[j] = p.lo[j] + rem % width[j];
        rem /= width[j];
      }
      for (std::size_t v = 0; v <= p.n; ++v) {
        std::int64_t x = p.y[v];
        for (std::size_t j = 0; j < last; ++j) x -= p.at(v, j) * c[j];
        a[v] = x;
      }
      auto scan = line_min(a, p, last, p.lo[last], p.hi[last]);
      if (index < 0 || scan.value < value) {
        value = scan.value;
        index = k;
        tbest = scan.t;
      }
    }

#pragma omp critical(rrgraph_box_min)
    {
      if (index >= 0 &&
          (best_index < 0 || value < best_value || (value == best_value && index < best_index))) {
        best_value = value;
        best_index = index;
        best_t = tbest;
      }
    }
  }

  BoxMin out{best_value, std::vector<std::int64_t>(p.n)};
  std::int64_t rem = best_index;
  for (std::size_t j = last; j-- > 0;) {
    out.argmin[j] = p.lo[j] + rem % width[j];
    rem /= width[j];
  }
  out.argmin[last] = best_t;
  return out;
}

}  // namespace rrgraph::kernels

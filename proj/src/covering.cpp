#include "degenlab/covering.hpp"

#include <cmath>
#include <string>

#include "degenlab/error.hpp"

namespace degenlab {

namespace {

void check_pair(const CoveringPair& p) {
  if (p.n < 1 || p.h < 0 || p.k < 0 || p.h >= p.n || p.k >= p.n) {
    throw Error(ErrorKind::domain_error,
                "pair needs 0 <= h, k < n; got (" + std::to_string(p.h) + "," +
                    std::to_string(p.k) + "," + std::to_string(p.n) + ")");
  }
}

// Both sides doubled so everything stays integral.
bool covers(std::int64_t h, std::int64_t k, std::int64_t n) {
  if (h + k > n - 1) return false;
  return 2 * h * n - h * (h + 1) + 2 * k * n - k * (k + 1) >= n * (n - 1);
}

}  // namespace

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw Error(ErrorKind::domain_error, "isqrt of a negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool is_covering_pair(const CoveringPair& p) {
  check_pair(p);
  return covers(p.h, p.k, p.n);
}

PairClassification classify_pair(const CoveringPair& p) {
  check_pair(p);
  PairClassification out;
  out.is_covering = covers(p.h, p.k, p.n);
  if (!out.is_covering) return out;
  out.left_minimal = p.h == 0 || !covers(p.h - 1, p.k, p.n);
  out.right_minimal = p.k == 0 || !covers(p.h, p.k - 1, p.n);
  return out;
}

bool is_covering_sum(int r, int n) {
  if (n < 1 || r < 0 || r >= n) {
    throw Error(ErrorKind::domain_error,
                "covering sum needs 0 <= r < n; got r=" + std::to_string(r) +
                    " n=" + std::to_string(n));
  }
  return covers((r + 1) / 2, r / 2, n);
}

CoveringSumThreshold covering_sum_threshold(int n) {
  const double nn = n;
  return {2 * nn - 1 - std::sqrt(2 * nn * nn - 2 * nn + 1),
          2 * nn - 1 - std::sqrt(2 * nn * nn - 2 * nn)};
}

SumRange ng_range(int n) {
  if (n < 1) throw Error(ErrorKind::domain_error, "ng_range needs n >= 1");
  const std::int64_t nn = n;
  const std::int64_t lo = 2 * nn - 1 - isqrt(2 * nn * nn - 2 * nn + 1);
  return {static_cast<int>(lo), n - 1};
}

CoveringPair minimal_k_pair_for_sum(int n, int r) {
  if (!is_covering_sum(r, n)) {
    throw Error(ErrorKind::not_a_covering_sum,
                std::to_string(r) + " is not a covering sum of order " +
                    std::to_string(n));
  }
  for (int k = 0; k <= r; ++k)
    if (covers(r - k, k, n)) return {r - k, k, n};
  throw Error(ErrorKind::not_a_covering_sum, "no covering pair found");
}

}  // namespace degenlab

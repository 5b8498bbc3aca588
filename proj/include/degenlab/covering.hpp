#pragma once

#include <cstdint>

namespace degenlab {

/// A candidate degeneracy pair (h, k) = (l(G), l(G^c)) for graphs of order n.
struct CoveringPair {
  int h;
  int k;
  int n;

  bool operator==(const CoveringPair&) const = default;
};

struct PairClassification {
  bool is_covering = false;
  bool left_minimal = false;
  bool right_minimal = false;
};

/// h + k <= n - 1 and the two Lick-White bounds together reach n(n-1)/2.
/// Exact integer arithmetic; throws domain_error unless 0 <= h, k < n.
bool is_covering_pair(const CoveringPair& p);

/// Minimality at h = 0 (resp. k = 0) holds by definition.
PairClassification classify_pair(const CoveringPair& p);

/// Whether (ceil(r/2), floor(r/2)) is covering; needs 0 <= r < n.
bool is_covering_sum(int r, int n);

struct CoveringSumThreshold {
  double even_min;  // 2n - 1 - sqrt(2n^2 - 2n + 1)
  double odd_min;   // 2n - 1 - sqrt(2n^2 - 2n)
};

/// Display values only; decisions go through is_covering_sum.
CoveringSumThreshold covering_sum_threshold(int n);

struct SumRange {
  int lo;
  int hi;

  bool operator==(const SumRange&) const = default;
};

/// [ceil(2n - 1 - sqrt(2n^2 - 2n + 1)), n - 1], computed with an integer
/// square root.
SumRange ng_range(int n);

/// Among covering pairs with h + k = r, the one with the smallest k.
/// Throws not_a_covering_sum.
CoveringPair minimal_k_pair_for_sum(int n, int r);

/// floor(sqrt(x)) for x >= 0, exact for all 64-bit inputs.
std::int64_t isqrt(std::int64_t x);

}  // namespace degenlab

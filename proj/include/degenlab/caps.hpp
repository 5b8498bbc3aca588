#pragma once

namespace degenlab {

inline constexpr int kDefaultMinorCap = 10;
inline constexpr int kDefaultSubgraphCap = 12;
inline constexpr int kDefaultGirthKMax = 64;

/// Order limits for the exponential oracles.
struct OracleCaps {
  int minor_cap = kDefaultMinorCap;        // ceilings and Hadwiger number
  int subgraph_cap = kDefaultSubgraphCap;  // subgraph searches, chi, alpha
  int girth_k_max = kDefaultGirthKMax;     // k used for infinite girth

  /// Defaults overridden by DEGENLAB_MINOR_CAP, DEGENLAB_SUBGRAPH_CAP and
  /// DEGENLAB_GIRTH_K_MAX when set to positive integers.
  static OracleCaps from_env();
};

}  // namespace degenlab

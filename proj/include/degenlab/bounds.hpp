#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degenlab/caps.hpp"
#include "degenlab/graph.hpp"

namespace degenlab {

/// A real bound value with its exact rational form when one exists.
/// Comparisons use the exact forms whenever both sides have one.
struct BoundValue {
  double approx = 0.0;
  std::optional<Rational> exact;

  static BoundValue of(const Rational& r) { return {to_double(r), r}; }
  static BoundValue of(long long v) { return of(Rational(v)); }
  static BoundValue real(double v) { return {v, std::nullopt}; }
};

bool operator<(const BoundValue& a, const BoundValue& b);

/// One lower bound on nu(G). `strict` marks "nu > value" as opposed to
/// "nu >= value". Conditional entries assume the delta-conjecture; symbolic
/// entries carry an unspecified constant. Neither kind feeds best_nu_lower.
struct BoundEntry {
  std::string source;
  BoundValue value;
  bool strict = false;
  bool conditional = false;
  bool symbolic = false;
  std::string note;
};

/// Largest k >= 1 with n >= 2k - 1 and m >= (2k - 3)(n - k + 1) + 1.
int mader_k_guarantee(long long n, long long m);

/// (n - 1)/2 - sqrt(m_c / 2); nu(G) strictly exceeds it.
double nu_lower_from_complement(int n, long long m_c);

/// (1 + 1/sqrt 2) n + 1, a strict upper bound on mr_nu(G) + mr_nu(G^c). n >= 4.
double wggc_bound(int n);

/// Bounds on mr_nu(G) + mr_nu(G^c) that hold if the delta-conjecture does.
struct ConditionalWggc {
  double half;     // 3n/2 + 1/2
  double sqrt2;    // sqrt(2) n + 1
};
ConditionalWggc conditional_wggc_bounds(int n);

/// n - 2 l(G^c) - 1 (negative values are vacuous).
int mitchel_lower(int n, int l_c);

/// Girth/minimum-degree bounds on nu, each at its largest admissible k.
/// Infinite girth uses k_max. Empty when no clause applies.
std::vector<BoundEntry> girth_nu_bound(int delta, const Girth& g,
                                       int k_max = kDefaultGirthKMax);

struct ForbiddenPattern {
  enum class Kind { complete_bipartite, even_cycle };
  Kind kind;
  int s = 0;        // K_{s,s'}: 2 <= s <= s'
  int s_prime = 0;
  int t = 0;        // C_{2t}: t >= 2

  static ForbiddenPattern k(int s, int s_prime) {
    return {Kind::complete_bipartite, s, s_prime, 0};
  }
  static ForbiddenPattern cycle(int t) { return {Kind::even_cycle, 0, 0, t}; }
  std::string name() const;
};

/// nu > (c/4) d^exponent with c unknown; `magnitude` is d^exponent.
struct ForbiddenBound {
  Rational exponent;
  double magnitude;
  std::string statement;
};

ForbiddenBound forbidden_subgraph_bound(const Rational& d, const ForbiddenPattern& pattern);

struct CertificateStatus {
  enum class Kind { certified, conditional, not_certified };
  Kind kind;
  char clause;  // 'a'..'e', or 0 when not certified
  std::string detail;
};

const char* to_string(CertificateStatus::Kind kind) noexcept;

/// Whether nu(G) >= delta follows from the girth or forbidden-subgraph
/// clauses. Forbidden-pattern clauses have unknown thresholds and so only
/// ever report `conditional`.
CertificateStatus delta_conjecture_certificate(
    int delta, const Girth& g, const std::optional<ForbiddenPattern>& forbidden = std::nullopt);

/// (80 - sqrt 5392) / 126.
double balogh_kostochka_constant();

/// nu > 16 chi / 49 and nu >= n / ((2 - c) alpha) - 1.
std::vector<BoundEntry> section4_bounds(int chi, int alpha, int n);

struct BoundReport {
  int n;
  int m;
  int m_c;
  std::vector<BoundEntry> nu_lower_entries;
  BoundEntry best_nu_lower;
  double mr_nu_upper;
  std::vector<CertificateStatus> certificates;
  double wggc_unconditional;  // NaN for n < 4
  ConditionalWggc wggc_conditional;
};

/// Every applicable lower bound for one graph. Entries needing the
/// exponential oracles appear only when n is within `caps`.
BoundReport bound_report(const Graph& g, const OracleCaps& caps = {});

}  // namespace degenlab

#include "degenlab/bounds.hpp"

#include <cmath>
#include <limits>

#include "degenlab/degeneracy.hpp"
#include "degenlab/minors.hpp"

namespace degenlab {

namespace {

constexpr long long kHugeDegree = 8'000'000;

// base^exp as an exact integer when it fits comfortably in 63 bits.
std::optional<long long> exact_power(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<long long>::max() / 4 / base) {
      return std::nullopt;
    }
    out *= base;
  }
  return out;
}

BoundValue power_over(long long base, int exp, long long numerator_factor,
                      long long denominator) {
  if (auto p = exact_power(base, exp)) {
    if (*p <= std::numeric_limits<long long>::max() / std::max(1LL, numerator_factor)) {
      return BoundValue::of(Rational(*p * numerator_factor, denominator));
    }
  }
  return BoundValue::real(static_cast<double>(numerator_factor) *
                          std::pow(static_cast<double>(base), exp) /
                          static_cast<double>(denominator));
}

BoundEntry entry(std::string source, BoundValue value, bool strict, std::string note) {
  BoundEntry e;
  e.source = std::move(source);
  e.value = value;
  e.strict = strict;
  e.note = std::move(note);
  return e;
}

}  // namespace

bool operator<(const BoundValue& a, const BoundValue& b) {
  if (a.exact && b.exact) return *a.exact < *b.exact;
  return a.approx < b.approx;
}

int mader_k_guarantee(long long n, long long m) {
  if (n < 1 || m < 0 || m > n * (n - 1) / 2) {
    throw Error(ErrorKind::domain_error, "mader_k_guarantee needs n >= 1 and 0 <= m <= n(n-1)/2");
  }
  int best = 1;
  for (long long k = 2; 2 * k - 1 <= n; ++k)
    if (m >= (2 * k - 3) * (n - k + 1) + 1) best = static_cast<int>(k);
  return best;
}

double nu_lower_from_complement(int n, long long m_c) {
  if (n < 1 || m_c < 0 || m_c > static_cast<long long>(n) * (n - 1) / 2) {
    throw Error(ErrorKind::domain_error, "complement size out of range");
  }
  return (n - 1) / 2.0 - std::sqrt(static_cast<double>(m_c) / 2.0);
}

double wggc_bound(int n) {
  if (n < 4) throw Error(ErrorKind::domain_error, "the unconditional bound needs n >= 4");
  return (1.0 + 1.0 / std::sqrt(2.0)) * n + 1.0;
}

ConditionalWggc conditional_wggc_bounds(int n) {
  if (n < 1) throw Error(ErrorKind::domain_error, "n must be positive");
  return {1.5 * n + 0.5, std::sqrt(2.0) * n + 1.0};
}

int mitchel_lower(int n, int l_c) {
  if (l_c < 0 || l_c >= n) {
    throw Error(ErrorKind::domain_error, "mitchel_lower needs 0 <= l_c < n");
  }
  return n - 2 * l_c - 1;
}

std::vector<BoundEntry> girth_nu_bound(int delta, const Girth& g, int k_max) {
  if (delta < 0) throw Error(ErrorKind::domain_error, "delta must be nonnegative");
  std::vector<BoundEntry> out;
  const auto k_for = [&](int offset, int step) {
    return g.is_infinite() ? k_max : (g.length() - offset) / step;
  };

  if (delta >= 3) {
    if (const int k = k_for(3, 4); k >= 1) {
      out.push_back(entry("kuhn-osthus-girth-a", power_over(delta - 1, k + 1, 1, 192),
                          true, "k=" + std::to_string(k) + ": (delta-1)^(k+1)/192"));
    }
  }
  if (delta >= kHugeDegree) {
    const int k = std::min(k_for(1, 4), delta / 20);
    if (k >= 1) {
      const double v = std::pow(static_cast<double>(delta), k + 0.5) / 1152.0;
      out.push_back(entry("kuhn-osthus-girth-b", BoundValue::real(v), true,
                          "k=" + std::to_string(k) + ": delta^(k+1/2)/1152"));
    }
  }
  if (delta >= 3) {
    if (const int k = k_for(3, 8); k >= 1) {
      out.push_back(entry("mader-girth-minor", power_over(delta - 1, k, delta, 4), true,
                          "k=" + std::to_string(k) + ": delta(delta-1)^k/4"));
    }
  }
  return out;
}

std::string ForbiddenPattern::name() const {
  if (kind == Kind::complete_bipartite) {
    return "K_{" + std::to_string(s) + "," + std::to_string(s_prime) + "}";
  }
  return "C_" + std::to_string(2 * t);
}

ForbiddenBound forbidden_subgraph_bound(const Rational& d, const ForbiddenPattern& pattern) {
  if (d < 0) throw Error(ErrorKind::domain_error, "average degree must be nonnegative");
  Rational exponent;
  std::string constant;
  if (pattern.kind == ForbiddenPattern::Kind::complete_bipartite) {
    if (pattern.s < 2 || pattern.s_prime < pattern.s) {
      throw Error(ErrorKind::domain_error, "K_{s,s'} needs 2 <= s <= s'");
    }
    exponent = 1 + Rational(1, 2 * (pattern.s - 1));
    constant = "c(" + std::to_string(pattern.s) + "," + std::to_string(pattern.s_prime) + ")";
  } else {
    if (pattern.t < 2) throw Error(ErrorKind::domain_error, "C_{2t} needs t >= 2");
    exponent = Rational(pattern.t + 1, 2);
    constant = "c(" + std::to_string(pattern.t) + ")";
  }
  const double magnitude = std::pow(to_double(d), to_double(exponent));
  std::string statement = "nu > " + constant + "/4 * " + std::to_string(magnitude);
  return {exponent, magnitude, std::move(statement)};
}

const char* to_string(CertificateStatus::Kind kind) noexcept {
  switch (kind) {
    case CertificateStatus::Kind::certified: return "CERTIFIED";
    case CertificateStatus::Kind::conditional: return "CONDITIONAL";
    case CertificateStatus::Kind::not_certified: return "NOT-CERTIFIED";
  }
  return "?";
}

CertificateStatus delta_conjecture_certificate(int delta, const Girth& g,
                                               const std::optional<ForbiddenPattern>& forbidden) {
  using K = CertificateStatus::Kind;
  const bool g_at_least_11 = g.is_infinite() || g.length() >= 11;
  if (g_at_least_11 && delta >= 4) return {K::certified, 'a', "girth >= 11, delta >= 4"};
  if (!g.is_infinite() && g.length() >= 7 && g.length() <= 10 && delta >= 193) {
    return {K::certified, 'b', "girth in 7..10, delta >= 193"};
  }
  if (!g.is_infinite() && g.length() >= 5 && g.length() <= 6 && delta >= kHugeDegree) {
    return {K::certified, 'c', "girth in {5,6}, delta >= 8*10^6"};
  }
  if (forbidden) {
    if (forbidden->kind == ForbiddenPattern::Kind::complete_bipartite) {
      return {K::conditional, 'd', forbidden->name() + "-free; needs delta >= r(s,s'), unknown"};
    }
    return {K::conditional, 'e', forbidden->name() + "-free; needs delta >= r(t), unknown"};
  }
  return {K::not_certified, 0, "no clause applies"};
}

double balogh_kostochka_constant() { return (80.0 - std::sqrt(5392.0)) / 126.0; }

std::vector<BoundEntry> section4_bounds(int chi, int alpha, int n) {
  if (chi < 1 || alpha < 1 || alpha > n) {
    throw Error(ErrorKind::domain_error, "need chi >= 1 and 1 <= alpha <= n");
  }
  const double c = balogh_kostochka_constant();
  return {
      entry("nguyen-chromatic", BoundValue::of(Rational(16 * chi, 49)), true, "16 chi / 49"),
      entry("balogh-kostochka",
            BoundValue::real(static_cast<double>(n) / ((2.0 - c) * alpha) - 1.0), false,
            "n / ((2 - c) alpha) - 1"),
  };
}

namespace {

bool has_four_cycle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (popcount(g.neighbors(u) & g.neighbors(v)) >= 2) return true;
  return false;
}

}  // namespace

BoundReport bound_report(const Graph& g, const OracleCaps& caps) {
  const int n = g.order();
  const Graph gc = complement(g);
  BoundReport r;
  r.n = n;
  r.m = g.size();
  r.m_c = gc.size();

  auto& out = r.nu_lower_entries;
  out.push_back(entry("mader-complement-size",
                      BoundValue::real(nu_lower_from_complement(n, r.m_c)), true,
                      "(n-1)/2 - sqrt(m(G^c)/2)"));
  const int l = degeneracy(g).value;
  const int l_c = degeneracy(gc).value;
  out.push_back(entry("mitchel-degeneracy", BoundValue::of(mitchel_lower(n, l_c)), false,
                      "n - 2 l(G^c) - 1"));
  out.push_back(entry("vertex-connectivity", BoundValue::of(vertex_connectivity(g)), false,
                      "kappa(G)"));
  if (n <= caps.subgraph_cap) {
    out.push_back(entry("subgraph-connectivity",
                        BoundValue::of(max_subgraph_connectivity(g, caps.subgraph_cap)),
                        false, "max kappa over subgraphs"));
  }
  std::optional<Rational> ceil_delta;
  if (n <= caps.minor_cap) {
    out.push_back(entry("kappa-ceiling",
                        BoundValue::of(ceiling_value(g, CeilingParam::kappa, caps.minor_cap)),
                        false, "ceil-kappa(G)"));
    const Rational ceil_d = ceiling_value(g, CeilingParam::avg_degree, caps.minor_cap);
    out.push_back(entry("avg-degree-ceiling", BoundValue::of(ceil_d / 4), true,
                        "ceil-d(G)/4"));
    ceil_delta = ceiling_value(g, CeilingParam::delta, caps.minor_cap);
  }
  const int delta = min_degree(g);
  const Girth gi = girth(g);
  for (auto& e : girth_nu_bound(delta, gi, caps.girth_k_max)) out.push_back(std::move(e));
  if (n <= caps.subgraph_cap) {
    for (auto& e : section4_bounds(chromatic_number(g), independence_number(g), n))
      out.push_back(std::move(e));
  }

  BoundEntry conj = entry("delta-conjecture", BoundValue::of(ceil_delta ? *ceil_delta : l),
                          false, ceil_delta ? "ceil-delta(G)" : "l(G)");
  conj.conditional = true;
  out.push_back(conj);

  r.best_nu_lower = out.front();
  for (const auto& e : out) {
    if (e.conditional || e.symbolic) continue;
    if (r.best_nu_lower.value < e.value) r.best_nu_lower = e;
  }
  r.mr_nu_upper = n - r.best_nu_lower.value.approx;

  r.certificates.push_back(delta_conjecture_certificate(delta, gi));
  if (!has_four_cycle(g)) {
    r.certificates.push_back(delta_conjecture_certificate(delta, gi, ForbiddenPattern::k(2, 2)));
    r.certificates.push_back(delta_conjecture_certificate(delta, gi, ForbiddenPattern::cycle(2)));
  }
  r.wggc_unconditional = n >= 4 ? wggc_bound(n) : std::numeric_limits<double>::quiet_NaN();
  r.wggc_conditional = conditional_wggc_bounds(n);
  return r;
}

}  // namespace degenlab

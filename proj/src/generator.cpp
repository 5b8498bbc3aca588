#include "degenlab/generator.hpp"

#include <algorithm>
#include <numeric>

#include "degenlab/covering.hpp"

namespace degenlab {

namespace {

GenStep summarize(int i, std::vector<int> chosen, const std::vector<int>& L) {
  GenStep step{i, std::move(chosen), L, 0, 0, 0, 0, {}};
  step.t = *std::max_element(L.begin(), L.end());
  step.sigma = std::accumulate(L.begin(), L.end(), 0LL);
  step.psi.assign(step.t + 1, 0);
  for (int x : L) ++step.psi[x];
  step.q = step.psi[step.t];
  step.p = step.t >= 1 ? step.psi[step.t - 1] : 0;
  return step;
}

// Indices of the h largest entries of L; ties go to the smaller index.
std::vector<int> largest_entries(const std::vector<int>& L, int h) {
  std::vector<int> order(L.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return L[a] > L[b]; });
  order.resize(h);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

Generated generate(int n, int h) {
  if (n < 1 || n > kMaxOrder || h < 0 || h >= n) {
    throw Error(ErrorKind::domain_error,
                "generate needs 0 <= h < n <= 64; got n=" + std::to_string(n) +
                    " h=" + std::to_string(h));
  }
  Graph g(n);
  std::vector<int> L(n, 0);
  GenTrace trace{n, h, {}};
  for (int i = 2; i <= n; ++i) {
    const int v = i - 1;
    std::vector<int> chosen;
    if (i <= h + 1) {
      chosen.resize(v);
      std::iota(chosen.begin(), chosen.end(), 0);
    } else {
      chosen = largest_entries(L, h);
    }
    for (int j = 0; j < v; ++j) {
      if (std::binary_search(chosen.begin(), chosen.end(), j)) {
        g.add_edge(v, j);
      } else {
        ++L[j];
      }
    }
    trace.steps.push_back(summarize(i, std::move(chosen), L));
  }
  return {g, std::move(trace)};
}

namespace {

std::optional<TraceViolation> fail(int i, std::string clause, std::string detail) {
  return TraceViolation{i, std::move(clause), std::move(detail)};
}

std::string show(long long a, const char* rel, long long b) {
  return std::to_string(a) + " " + rel + " " + std::to_string(b);
}

}  // namespace

std::optional<TraceViolation> check_trace(const GenTrace& trace, int n, int h) {
  if (trace.n != n || trace.h != h) {
    return fail(0, "header", "trace belongs to a different (n, h)");
  }
  if (static_cast<int>(trace.steps.size()) != n - 1) {
    return fail(0, "length", show(static_cast<long long>(trace.steps.size()), "!=", n - 1));
  }
  // Iteration 1 is the all-zero vector.
  int prev_t = 0;
  int prev_q = n;
  long long prev_sigma = 0;
  for (const GenStep& s : trace.steps) {
    const int i = s.i;
    if (static_cast<int>(s.L.size()) != n) return fail(i, "length", "L has wrong size");

    const GenStep expect = summarize(i, s.chosen, s.L);
    if (expect.t != s.t || expect.sigma != s.sigma || expect.p != s.p ||
        expect.q != s.q || expect.psi != s.psi) {
      return fail(i, "summary", "t/sigma/p/q/psi disagree with L");
    }
    const int chosen = static_cast<int>(s.chosen.size());
    if (chosen != std::min(i - 1, h)) {
      return fail(i, "chosen-size", show(chosen, "!=", std::min(i - 1, h)));
    }
    if (s.sigma - prev_sigma != (i - 1) - chosen) {
      return fail(i, "sigma-step", show(s.sigma - prev_sigma, "!=", (i - 1) - chosen));
    }
    if (s.t != prev_t && s.t != prev_t + 1) {
      return fail(i, "t-step", show(s.t, "not in", prev_t) + "/+1");
    }

    if (i <= h + 1) {
      if (s.t != 0) return fail(i, "complete-prefix", "L must stay zero");
    } else {
      const int want_t = prev_q <= h ? prev_t : prev_t + 1;
      if (s.t != want_t) return fail(i, "t-recurrence", show(s.t, "!=", want_t));
      if (s.t == 1) {
        if (s.q < 1 || s.q > i - 1) {
          return fail(i, "fact1-t1", "q=" + std::to_string(s.q) + " outside [1, i-1]");
        }
      } else if (s.t >= 2) {
        if (s.psi[0] != n - i + 1) {
          return fail(i, "fact1-psi0", show(s.psi[0], "!=", n - i + 1));
        }
        for (int r = 1; r <= s.t - 2; ++r) {
          if (s.psi[r] != 1) {
            return fail(i, "fact1-psi-r",
                        "psi(" + std::to_string(r) + ")=" + std::to_string(s.psi[r]));
          }
        }
        if (s.p < 1 || s.q < 1) return fail(i, "fact1-pq-positive", "p or q is zero");
        if (s.p + s.q < h) return fail(i, "fact1-pq-sum", show(s.p + s.q, "<", h));
      } else {
        return fail(i, "fact1-t-positive", "t = 0 after the complete prefix");
      }
    }
    prev_t = s.t;
    prev_q = s.q;
    prev_sigma = s.sigma;
  }

  const long long N = n;
  const long long t = prev_t;
  const long long sigma = prev_sigma;
  const long long lower = (t - 1) * N - (t - 1) * t / 2 + 1;
  const long long upper = t * N - t * (t + 1) / 2;
  if (sigma < lower || sigma > upper) {
    return fail(n, "sigma-bounds",
                std::to_string(lower) + " <= " + std::to_string(sigma) +
                    " <= " + std::to_string(upper) + " fails");
  }
  const long long H = h;
  if (H * N - H * (H + 1) / 2 + sigma != N * (N - 1) / 2) {
    return fail(n, "h-sigma", "size of G plus sigma_n is not n(n-1)/2");
  }
  return std::nullopt;
}

Graph realize_sum(int n, int r) {
  const CoveringPair pair = minimal_k_pair_for_sum(n, r);
  return generate(n, pair.h).graph;
}

}  // namespace degenlab

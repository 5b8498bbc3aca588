#pragma once

#include <span>
#include <vector>

#include "degenlab/graph.hpp"

namespace degenlab {

/// `ordering` is a building sequence: back_degrees[i] is the number of
/// neighbours of ordering[i] among ordering[0..i-1], and the largest of them
/// equals `value`.
struct DegeneracyCertificate {
  int value;
  std::vector<int> ordering;
  std::vector<int> back_degrees;
};

/// l(G) by minimum-degree peeling (ties go to the smallest index); the
/// certificate lists vertices in reverse peeling order.
DegeneracyCertificate degeneracy(const Graph& g);

/// Back-degree of every position of `order`. Throws not_a_permutation.
std::vector<int> back_degrees(const Graph& g, std::span<const int> order);

/// max over `order` of the back-degree; always >= l(G).
int building_sequence_degree(const Graph& g, std::span<const int> order);

/// kn - k(k+1)/2, the Lick-White edge bound for order n and degeneracy k.
long long lick_white_bound(int n, int k);

}  // namespace degenlab

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freewalk/step_distribution.hpp"
#include "freewalk/words.hpp"

namespace freewalk {

// Weighted prefix graph: vertices are Prefix(supp(mu)) in lexicographic
// order (so the empty word has index 0), with one-step prefix edges plus a
// closing edge to the empty word for each supported word.  Weights are the
// unnormalized W; the Markov kernel is derived by kernel().
struct WeightedPrefixGraph {
  struct Edge {
    int from = 0;
    int to = 0;
    double weight = 0.0;
    bool closing = false;  // true for w -> empty edges carrying mu({w})
  };

  std::vector<ReducedWord> vertices;
  std::vector<Edge> edges;

  int index_of(const ReducedWord& w) const;  // -1 if absent
};

WeightedPrefixGraph build_prefix_graph(const StepDistribution& mu);

// Row-stochastic transition kernel P(x,y) = W(x,y) / sum_z W(x,z),
// over the same vertex indexing as the graph.
struct ChainKernel {
  std::vector<ReducedWord> vertices;
  std::vector<double> p;  // row-major, size n*n

  int size() const { return static_cast<int>(vertices.size()); }
  double at(int from, int to) const { return p[from * vertices.size() + to]; }
};

ChainKernel kernel(const WeightedPrefixGraph& g);

// Max over vertices of |in-weight - out-weight|; flow conservation means
// this is ~0 for any correctly built graph.
double check_flow(const WeightedPrefixGraph& g);

// Probability that one excursion of the chain from the empty word returns
// to it through w: the product of kernel entries along the unique spelling
// path of w.  Equals mu({w}).
double excursion_probability(const WeightedPrefixGraph& g,
                             const ChainKernel& P, const ReducedWord& w);

// Deterministic DOT export: nodes labelled by word, edges by weight to 6
// significant digits, vertices in lexicographic order.
std::string export_dot(const WeightedPrefixGraph& g);

struct ChainTrajectory {
  std::vector<int> states;  // y_1 ... y_n (vertex indices)
  Word projected;           // pi(y_1) ... pi(y_n); pi(empty) contributes nothing
};

// Simulate the chain started at the empty word (y_1 drawn from its row).
ChainTrajectory simulate_chain(const ChainKernel& P, int n, std::uint64_t seed);

}  // namespace freewalk

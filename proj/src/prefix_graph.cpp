#include "freewalk/prefix_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "freewalk/rng.hpp"

namespace freewalk {

int WeightedPrefixGraph::index_of(const ReducedWord& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it != vertices.end() && *it == w) {
    return static_cast<int>(it - vertices.begin());
  }
  return -1;
}

WeightedPrefixGraph build_prefix_graph(const StepDistribution& mu) {
  WeightedPrefixGraph g;
  g.vertices = prefix_closure(mu.support());

  // Prefix edges w' -> w'x with weight sum of mu over extensions of w'x.
  for (int to = 0; to < static_cast<int>(g.vertices.size()); ++to) {
    const ReducedWord& w = g.vertices[to];
    if (w.empty()) continue;
    int from = g.index_of(w.prefix(w.size() - 1));
    double weight = 0.0;
    for (const Atom& atom : mu.atoms()) {
      if (atom.word.size() >= w.size() && atom.word.prefix(w.size()) == w) {
        weight += atom.prob;
      }
    }
    g.edges.push_back({from, to, weight, false});
  }
  // Closing edges w -> empty with weight mu({w}).  A closing edge can never
  // coincide with a prefix edge: the empty word is not a one-step extension.
  for (const Atom& atom : mu.atoms()) {
    g.edges.push_back({g.index_of(atom.word), 0, atom.prob, true});
  }
  return g;
}

ChainKernel kernel(const WeightedPrefixGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  ChainKernel k;
  k.vertices = g.vertices;
  k.p.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> out(n, 0.0);
  for (const auto& e : g.edges) out[e.from] += e.weight;
  for (const auto& e : g.edges) {
    k.p[e.from * n + e.to] += e.weight / out[e.from];
  }
  return k;
}

double check_flow(const WeightedPrefixGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<double> in(n, 0.0), out(n, 0.0);
  for (const auto& e : g.edges) {
    out[e.from] += e.weight;
    in[e.to] += e.weight;
  }
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    residual = std::max(residual, std::abs(in[i] - out[i]));
  }
  return residual;
}

double excursion_probability(const WeightedPrefixGraph& g,
                             const ChainKernel& P, const ReducedWord& w) {
  if (g.index_of(w) < 0 ||
      std::none_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
        return e.closing && g.vertices[e.from] == w;
      })) {
    throw ValidationError("WordNotInSupport",
                          "'" + to_string(w) + "' is not an atom of mu");
  }
  double prob = 1.0;
  int state = 0;  // empty word
  for (std::size_t i = 1; i <= w.size(); ++i) {
    int next = g.index_of(w.prefix(i));
    prob *= P.at(state, next);
    state = next;
  }
  return prob * P.at(state, 0);
}

std::string export_dot(const WeightedPrefixGraph& g) {
  std::string out = "digraph prefix_graph {\n  rankdir=LR;\n";
  for (const ReducedWord& w : g.vertices) {
    std::string name = w.empty() ? "eps" : to_string(w);
    out += "  \"" + name + "\";\n";
  }
  // Edges sorted by (from, to, closing) for byte-identical output.
  std::vector<WeightedPrefixGraph::Edge> edges = g.edges;
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.to, x.closing) < std::tie(y.from, y.to, y.closing);
  });
  char label[32];
  for (const auto& e : edges) {
    std::snprintf(label, sizeof(label), "%.6g", e.weight);
    std::string from = g.vertices[e.from].empty() ? "eps" : to_string(g.vertices[e.from]);
    std::string to = g.vertices[e.to].empty() ? "eps" : to_string(g.vertices[e.to]);
    out += "  \"" + from + "\" -> \"" + to + "\" [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  return out;
}

ChainTrajectory simulate_chain(const ChainKernel& P, int n,
                               std::uint64_t seed) {
  Rng rng(seed);
  ChainTrajectory traj;
  traj.states.reserve(n);
  const int m = P.size();
  int state = 0;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform01();
    double acc = 0.0;
    int next = m - 1;
    for (int j = 0; j < m; ++j) {
      acc += P.at(state, j);
      if (u < acc) {
        next = j;
        break;
      }
    }
    traj.states.push_back(next);
    if (!P.vertices[next].empty()) {
      traj.projected.push_back(P.vertices[next].back());
    }
    state = next;
  }
  return traj;
}

}  // namespace freewalk

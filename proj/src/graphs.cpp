#include "eccwheel/graphs.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "eccwheel/errors.hpp"

namespace eccwheel::graphs {

WheelSpec WheelSpec::of(int n) {
  if (n < 4) {
    throw DomainError("wheel graph needs n >= 4, got " + std::to_string(n));
  }
  return WheelSpec{n, n % 3, n % 2};
}

Graph::Graph(std::vector<std::vector<std::size_t>> adjacency)
    : adjacency_(std::move(adjacency)) {
  if (adjacency_.empty()) throw DimensionError("Graph: no vertices");
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("Graph: repeated edge");
    }
    for (auto u : nbrs) {
      if (u >= adjacency_.size()) throw std::invalid_argument("Graph: bad vertex");
      if (u == v) throw std::invalid_argument("Graph: self-loop");
    }
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    for (auto u : adjacency_[v]) {
      if (!has_edge(u, v)) throw std::invalid_argument("Graph: asymmetric adjacency");
    }
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(adjacency_.size());
  for (const auto& nbrs : adjacency_) out.push_back(nbrs.size());
  return out;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    for (auto u : adjacency_[v]) {
      if (v < u) out.emplace_back(v + 1, u + 1);
    }
  }
  return out;
}

Graph build_wheel(int n) {
  WheelSpec::of(n);
  const auto order = static_cast<std::size_t>(n);
  const std::size_t rim = order - 1;
  std::vector<std::vector<std::size_t>> adj(order);
  for (std::size_t k = 0; k < rim; ++k) {
    const std::size_t v = 1 + k;
    const std::size_t next = 1 + (k + 1) % rim;
    adj[0].push_back(v);
    adj[v].push_back(0);
    adj[v].push_back(next);
    adj[next].push_back(v);
  }
  return Graph(std::move(adj));
}

Graph delete_cycle_edge(const Graph& wheel) {
  const auto order = wheel.vertex_count();
  if (order < 5) {
    throw DomainError("delete_cycle_edge: needs a wheel on n >= 5 vertices");
  }
  if (!(wheel == build_wheel(static_cast<int>(order)))) {
    throw std::invalid_argument("delete_cycle_edge: input is not a wheel graph");
  }
  // v_2 is index 1 and v_n is index n-1.
  const std::size_t a = 1;
  const std::size_t b = order - 1;
  std::vector<std::vector<std::size_t>> adj(order);
  for (std::size_t v = 0; v < order; ++v) {
    for (auto u : wheel.neighbors(v)) {
      if ((v == a && u == b) || (v == b && u == a)) continue;
      adj[v].push_back(u);
    }
  }
  return Graph(std::move(adj));
}

MatrixQ bfs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<Rational> entries;
  entries.reserve(n * n);
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      auto v = frontier.front();
      frontier.pop();
      for (auto u : g.neighbors(v)) {
        if (dist[u] == kUnseen) {
          dist[u] = dist[v] + 1;
          frontier.push(u);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] == kUnseen) {
        throw DisconnectedGraphError("bfs_distances: vertices " +
                                     std::to_string(s + 1) + " and " +
                                     std::to_string(t + 1) + " are disconnected");
      }
      entries.emplace_back(dist[t]);
    }
  }
  return MatrixQ(n, n, std::move(entries));
}

VectorQ eccentricities(const MatrixQ& distances) {
  if (!distances.is_square()) {
    throw DimensionError("eccentricities: distance matrix must be square");
  }
  return VectorQ::generate(distances.rows(), [&](std::size_t i) {
    Rational best = distances(i, 0);
    for (std::size_t j = 1; j < distances.cols(); ++j) {
      if (distances(i, j) > best) best = distances(i, j);
    }
    return best;
  });
}

MatrixQ eccentricity_matrix_definitional(const MatrixQ& distances) {
  const VectorQ ecc = eccentricities(distances);
  return MatrixQ::generate(
      distances.rows(), distances.cols(), [&](std::size_t i, std::size_t j) {
        const Rational& lo = ecc[i] < ecc[j] ? ecc[i] : ecc[j];
        return distances(i, j) == lo ? distances(i, j) : Rational(0);
      });
}

std::string edge_list(const Graph& g) {
  std::ostringstream os;
  for (auto [i, j] : g.edges()) os << i << ' ' << j << '\n';
  return os.str();
}

}  // namespace eccwheel::graphs

#pragma once

// Definitional ground truth for wheel graphs: adjacency, BFS distances,
// eccentricities and the eccentricity matrix computed straight from its
// definition.
//
// Vertices are 0-indexed internally. Internal vertex i is v_{i+1} in the
// usual 1-indexed labelling: index 0 is the hub v_1 and indices 1..n-1 are
// the rim vertices v_2..v_n in cyclic order.

#include <cstddef>
#include <string>
#include <vector>

#include "eccwheel/ratq.hpp"

namespace eccwheel::graphs {

struct WheelSpec {
  int n;
  int residue;  // n mod 3
  int parity;   // n mod 2

  // Throws DomainError for n < 4.
  static WheelSpec of(int n);
};

class Graph {
 public:
  // Adjacency lists must be symmetric and free of self-loops.
  explicit Graph(std::vector<std::vector<std::size_t>> adjacency);

  std::size_t vertex_count() const { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  std::vector<std::size_t> degrees() const;
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t edge_count() const;

  // Edges as 1-indexed (i, j) pairs with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Hub adjacent to every rim vertex; rim vertices form a cycle in label order.
Graph build_wheel(int n);

// Removes the rim edge v_2 v_n from a wheel on n >= 5 vertices.
Graph delete_cycle_edge(const Graph& wheel);

// All-pairs shortest path lengths by breadth-first search.
MatrixQ bfs_distances(const Graph& g);

// Row maxima of a distance matrix.
VectorQ eccentricities(const MatrixQ& distances);

// Entry (i,j) keeps d(i,j) when it equals min(e_i, e_j), otherwise 0.
MatrixQ eccentricity_matrix_definitional(const MatrixQ& distances);

// One "i j" pair per line, 1-indexed, each edge once.
std::string edge_list(const Graph& g);

}  // namespace eccwheel::graphs

#include <doctest.h>

#include <algorithm>

#include "eccwheel/errors.hpp"
#include "eccwheel/graphs.hpp"

using namespace eccwheel;
using namespace eccwheel::graphs;

namespace {

MatrixQ ecc_of(const Graph& g) { return eccentricity_matrix_definitional(bfs_distances(g)); }

}  // namespace

TEST_CASE("wheel spec") {
  const auto s = WheelSpec::of(8);
  CHECK(s.n == 8);
  CHECK(s.residue == 2);
  CHECK(s.parity == 0);
  CHECK_THROWS_AS(WheelSpec::of(3), DomainError);
}

TEST_CASE("small wheels") {
  const Graph k4 = build_wheel(4);
  CHECK(k4.edge_count() == 6);
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = 0; v < 4; ++v) CHECK(k4.has_edge(u, v) == (u != v));
  }

  CHECK(build_wheel(7).degrees() == std::vector<std::size_t>{6, 3, 3, 3, 3, 3, 3});

  const std::vector<std::pair<std::size_t, std::size_t>> w5 = {
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}};
  CHECK(build_wheel(5).edges() == w5);
  CHECK(edge_list(build_wheel(4)) == "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  CHECK_THROWS_AS(build_wheel(3), DomainError);
}

TEST_CASE("graph validation") {
  CHECK_THROWS(Graph({{1}, {}}));
  CHECK_THROWS(Graph(std::vector<std::vector<std::size_t>>{{0}}));
  CHECK_THROWS(Graph({{1, 1}, {0}}));
  CHECK_THROWS(Graph({{2}, {}}));
  CHECK_THROWS_AS(Graph({}), DimensionError);
}

TEST_CASE("deleting the rim edge") {
  const Graph g = delete_cycle_edge(build_wheel(5));
  CHECK(g.degrees() == std::vector<std::size_t>{4, 2, 3, 3, 2});
  CHECK_FALSE(g.has_edge(1, 4));
  CHECK_THROWS_AS(delete_cycle_edge(build_wheel(4)), DomainError);
  CHECK_THROWS(delete_cycle_edge(g));
  for (int n = 5; n <= 15; ++n) {
    const Graph w = build_wheel(n);
    const Graph we = delete_cycle_edge(w);
    const MatrixQ d = bfs_distances(we);
    CHECK(d(1, static_cast<std::size_t>(n - 1)) == Rational(2));
    CHECK(eccentricities(d) == eccentricities(bfs_distances(w)));
  }
}

TEST_CASE("breadth-first distances") {
  CHECK(bfs_distances(build_wheel(4)) == MatrixQ::ones(4, 4) - identity(4));
  CHECK_THROWS_AS(bfs_distances(Graph({{1}, {0}, {}})), DisconnectedGraphError);
  for (int n = 5; n <= 12; ++n) {
    const MatrixQ d = bfs_distances(build_wheel(n));
    const auto order = static_cast<std::size_t>(n);
    CHECK(d.is_symmetric());
    CHECK(d.row_vector(0) == VectorQ::generate(order, [](std::size_t j) { return Rational(j == 0 ? 0 : 1); }));
    for (std::size_t i = 0; i < order; ++i) {
      CHECK(d(i, i).is_zero());
      for (std::size_t j = 0; j < order; ++j) {
        for (std::size_t k = 0; k < order; ++k) CHECK(d(i, k) <= d(i, j) + d(j, k));
      }
    }
  }
}

TEST_CASE("eccentricities") {
  CHECK(eccentricities(bfs_distances(build_wheel(4))) == VectorQ::ones(4));
  for (int n = 5; n <= 20; ++n) {
    const VectorQ e = eccentricities(bfs_distances(build_wheel(n)));
    CHECK(e[0] == Rational(1));
    for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] == Rational(2));
  }
  // Relabelling vertices permutes the eccentricities.
  const Graph path({{1}, {0, 2}, {1}});
  const Graph relabelled({{2}, {2}, {0, 1}});
  auto a = eccentricities(bfs_distances(path));
  auto b = eccentricities(bfs_distances(relabelled));
  std::vector<Rational> av(a.entries().begin(), a.entries().end());
  std::vector<Rational> bv(b.entries().begin(), b.entries().end());
  std::sort(av.begin(), av.end());
  std::sort(bv.begin(), bv.end());
  CHECK(av == bv);
  CHECK_THROWS_AS(eccentricities(MatrixQ::zeros(2, 3)), DimensionError);
}

TEST_CASE("definitional eccentricity matrices") {
  CHECK(ecc_of(build_wheel(4)) == MatrixQ::ones(4, 4) - identity(4));
  CHECK(ecc_of(build_wheel(5)) == MatrixQ::from_rows({{0, 1, 1, 1, 1},
                                                      {1, 0, 0, 2, 0},
                                                      {1, 0, 0, 0, 2},
                                                      {1, 2, 0, 0, 0},
                                                      {1, 0, 2, 0, 0}}));
  CHECK(ecc_of(delete_cycle_edge(build_wheel(5))) == MatrixQ::from_rows({{0, 1, 1, 1, 1},
                                                                          {1, 0, 0, 2, 2},
                                                                          {1, 0, 0, 0, 2},
                                                                          {1, 2, 0, 0, 0},
                                                                          {1, 2, 2, 0, 0}}));
  for (int n = 5; n <= 20; ++n) {
    const MatrixQ e = ecc_of(build_wheel(n));
    CHECK(e.is_symmetric());
    CHECK(e.row_vector(0).sum() == Rational(n - 1));
    for (std::size_t i = 1; i < e.rows(); ++i) CHECK(e.row_vector(i).sum() == Rational(1 + 2 * (n - 4)));
  }
}

TEST_CASE("wheel minus an edge nests inside the next wheel minus an edge") {
  for (int n = 5; n <= 20; ++n) {
    const MatrixQ small = ecc_of(delete_cycle_edge(build_wheel(n)));
    const MatrixQ big = ecc_of(delete_cycle_edge(build_wheel(n + 1)));
    CHECK(big.block(0, 0, small.rows(), small.cols()) == small);
  }
}

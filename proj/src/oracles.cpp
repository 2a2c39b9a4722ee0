#include "ntc/oracles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace ntc::oracle {

namespace {

// Walks every point of [0, box]^n in lexicographic order.
template <typename F>
void for_each_in_box(std::size_t dim, long long box, F&& visit) {
  if (dim == 0) return;
  ZVec z(dim, 0);
  for (;;) {
    visit(z);
    std::size_t i = dim;
    while (i > 0 && z[i - 1] == box) {
      z[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
    ++z[i - 1];
  }
}

bool is_zero(const ZVec& z) {
  return std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; });
}

bool dominates(const ZVec& hi, const ZVec& lo) {
  for (std::size_t i = 0; i < hi.size(); ++i) {
    if (hi[i] < lo[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<ZVec> antinef_in_box(const IntersectionLattice& lat, long long box) {
  if (box < 0) throw std::invalid_argument("box bound must be >= 0");
  const Matrix& m = lat.form();
  auto antinef = [&](const ZVec& z) {  // M z <= 0, straight from the matrix
    for (std::size_t i = 0; i < m.size(); ++i) {
      Int dot = 0;
      for (std::size_t j = 0; j < m.size(); ++j) dot += m[i][j] * z[j];
      if (dot > 0) return false;
    }
    return true;
  };
  std::vector<ZVec> out;
  for_each_in_box(lat.size(), box, [&](const ZVec& z) {
    if (!is_zero(z) && antinef(z)) out.push_back(z);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZVec> minimal_antinef_in_box(const IntersectionLattice& lat, long long box) {
  const std::vector<ZVec> all = antinef_in_box(lat, box);
  std::vector<ZVec> minimal;
  for (const ZVec& z : all) {
    bool is_minimal = true;
    for (const ZVec& w : all) {
      if (w != z && dominates(z, w)) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(z);
  }
  return minimal;
}

std::vector<WeightedDualGraph> random_small_graphs(std::size_t count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedDualGraph> out;
  while (out.size() < count) {
    std::uniform_int_distribution<std::size_t> nverts(1, 5);
    const std::size_t n = nverts(rng);

    std::vector<Vertex> vertices;
    std::uniform_int_distribution<long long> self(-6, -1);
    std::uniform_int_distribution<long long> genus(0, 2);
    for (std::size_t i = 0; i < n; ++i) {
      vertices.push_back(Vertex{"E" + std::to_string(i), self(rng), genus(rng)});
    }

    // Random tree keeps the graph connected; each vertex after the first
    // attaches to an earlier one. Occasionally double an edge.
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      const std::size_t p = parent(rng);
      edges.emplace_back(vertices[p].id, vertices[i].id);
      std::uniform_int_distribution<int> dup(0, 9);
      if (dup(rng) == 0) edges.emplace_back(vertices[p].id, vertices[i].id);
    }

    std::vector<Arrow> arrows;
    std::uniform_int_distribution<int> narrows(0, 2);
    const int k = narrows(rng);
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> at(0, n - 1);
      std::uniform_int_distribution<long long> weight(1, 3);
      arrows.push_back(Arrow{vertices[at(rng)].id, weight(rng)});
    }

    try {
      out.push_back(make_graph("", std::move(vertices), edges, std::move(arrows)));
    } catch (const GraphError&) {
      // Not negative definite (or multi-edge made it so); draw again.
    }
  }
  return out;
}

std::vector<ZVec> random_cycles(std::size_t dim, std::size_t count, long long range,
                                unsigned long long seed) {
  if (range < 0) throw std::invalid_argument("range must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(-range, range);
  std::vector<ZVec> out;
  for (std::size_t i = 0; i < count; ++i) {
    ZVec z;
    for (std::size_t j = 0; j < dim; ++j) z.push_back(Int(coeff(rng)));
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace ntc::oracle

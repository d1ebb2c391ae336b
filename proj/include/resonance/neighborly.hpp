#pragma once

#include <string>
#include <vector>

#include "resonance/matrix.hpp"
#include "resonance/matroid.hpp"

namespace resonance {

// A partition structure on the ground set {1..n}: cone vertices plus a
// partition of the remaining support into blocks. As a graph, cone vertices
// are joined to every other vertex and support vertices are joined exactly
// within their block. Canonical form: cones sorted; blocks sorted
// internally and ordered by their least element.
struct NeighborlyStructure {
  int n = 0;
  std::vector<int> cones;
  std::vector<std::vector<int>> blocks;

  std::vector<int> support() const;
  // Pairs {i,j} (i<j) joined in the graph: within-block pairs and every pair
  // involving a cone vertex.
  std::vector<std::pair<int, int>> edges() const;
  bool operator==(const NeighborlyStructure& o) const {
    return n == o.n && cones == o.cones && blocks == o.blocks;
  }
  bool operator<(const NeighborlyStructure& o) const {
    if (cones != o.cones) return cones < o.cones;
    return blocks < o.blocks;
  }
};

// Validates (disjoint, in range, blocks cover exactly [n] minus cones) and
// canonicalizes.
NeighborlyStructure make_structure(int n, std::vector<int> cones,
                                   std::vector<std::vector<int>> blocks);

// "145|2|3|6|8 cones=7": blocks separated by '|', elements as the symbols
// 1-9,a,b,c when n <= 12, else comma-separated decimals; the cones suffix is
// optional and defaults to the elements missing from the blocks.
std::string format_structure(const NeighborlyStructure& ns);
NeighborlyStructure parse_structure(const std::string& s, int n);

// The structure is neighborly for m when, for every line X (trivial
// included) restricted to the support as X', |X'| >= 2, and every block B:
// |X' & B| >= |X'| - 1 forces X' <= B.
bool is_neighborly(const Matroid& m, const NeighborlyStructure& ns);

// Lines of m that are not cliques of the structure's graph, i.e. whose
// support part does not fit inside a single block. Rows of the associated
// incidence matrix are the full indicator vectors of these lines.
std::vector<std::vector<int>> x_gamma(const Matroid& m,
                                      const NeighborlyStructure& ns);
Matrix incidence_matrix(const FieldPtr& f, int n,
                        const std::vector<std::vector<int>>& lines);

// k: kernel of the x_gamma incidence matrix; k0: its intersection with the
// zero-sum hyperplane. Rows are deterministic rref bases in ambient
// coordinates.
struct KSpaces {
  Matrix k;
  Matrix k0;
};
KSpaces k_spaces(const Matroid& m, const FieldPtr& f,
                 const NeighborlyStructure& ns);

// Z_ns(la) = {eta in K : la_i eta_j - la_j eta_i = 0 for every edge {i,j}},
// returned as basis rows in ambient coordinates.
Matrix z_gamma(const Matroid& m, const FieldPtr& f,
               const NeighborlyStructure& ns, const Vec& la);

// {la in P(K) : dim Z_ns(la) >= k+1}, as canonical ambient representatives,
// sorted. cap bounds the number of points of P(K) enumerated.
std::vector<Vec> v_stratum(const Matroid& m, const FieldPtr& f,
                           const NeighborlyStructure& ns, int k,
                           uint64_t cap = 10000000);

// All neighborly structures of m with at least two blocks, canonical, in a
// deterministic order (cone sets by increasing bitmask, then partitions in
// restricted-growth order). Single-block structures are excluded: their
// graph is complete, so the stratum is projectively empty. cap bounds the
// number of candidate partitions examined.
std::vector<NeighborlyStructure> enumerate_neighborly(
    const Matroid& m, uint64_t cap = 10000000);

}  // namespace resonance

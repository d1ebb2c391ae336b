#pragma once

#include <optional>
#include <vector>

#include "resonance/matrix.hpp"
#include "resonance/matroid.hpp"
#include "resonance/neighborly.hpp"

namespace resonance {

// A line of P(F^k): canonical 2 x k rref representative plus its Pluecker
// coordinates (the 2x2 minors, in lexicographic (i,j) order; the first
// nonzero minor is 1 because the representative is reduced).
struct ProjLine {
  Matrix rep;
  Vec pluecker;
};

Vec pluecker_of(const Matrix& rep);
// Three-term Grassmann-Pluecker check for a C(k,2) coordinate vector.
bool grassmann_pluecker_ok(const FieldPtr& f, int k, const Vec& pl);
// All lines of P(F^k), enumerated by rref shape: pivot pair ascending, free
// entries in mixed-radix order. Count is the Gaussian binomial [k choose 2].
std::vector<ProjLine> all_lines_of(const FieldPtr& f, int k,
                                   uint64_t cap = 10000000);
uint64_t line_count(const FieldPtr& f, int k);
// The q+1 canonical points of the line.
std::vector<Vec> points_of_line(const FieldPtr& f, const ProjLine& l);
// Nonempty intersection with the row space of sub (same coordinates).
bool line_meets(const ProjLine& l, const Matrix& sub);

// Directrix of a block: D_S = {xi in K : xi_i = 0 for all i in S} where
// S is the block together with the cone vertices. "coords" expresses
// D.ambient intersected with K0 in the rows-of-k0 basis; codim is measured
// inside K0.
struct Directrix {
  std::vector<int> s;
  Matrix ambient;
  Matrix coords;
  int codim;
};
struct DirectrixSystem {
  FieldPtr f;
  Matrix k;   // ambient basis rows of K
  Matrix k0;  // ambient basis rows of K0
  std::vector<Directrix> ds;
};
DirectrixSystem directrices(const Matroid& m, const FieldPtr& f,
                            const NeighborlyStructure& ns);

// Lines of P(K0) (in k0 coordinates) meeting every selected directrix. With
// proper_only the selection is the proper part: directrices of codim >= 2;
// those of codim <= 1 are met by every line automatically.
struct LineComplex {
  FieldPtr f;
  int k = 0;  // coordinate dimension, dim K0
  std::vector<ProjLine> lines;
  std::vector<int> selected;
};
LineComplex line_complex(const DirectrixSystem& sys,
                         uint64_t line_cap = 10000000,
                         bool proper_only = true);
// Same filter for raw subspaces of a k-dimensional coordinate space (no
// proper-part selection: every given subspace must be met). Lines are
// returned sorted by the entries of their reduced representatives. With at
// least one subspace given, lines are generated as spans of a point of the
// smallest subspace and an ambient point, so the cap bounds that candidate
// pair count rather than the full line count of P(F^k).
LineComplex line_complex_in(const FieldPtr& f, int k,
                            const std::vector<Matrix>& subs,
                            uint64_t line_cap = 10000000);

// Union of the complex's lines. depth(p) is dim of the projective span of
// the lines through p when the union of those lines covers every F_q-point
// of that span, and 1 otherwise. "ambient" rows are the coordinates mapped
// through a basis (empty when no basis is attached).
struct CarrierPoint {
  Vec coords;
  Vec ambient;
  int depth = 1;
};
struct Carrier {
  std::vector<CarrierPoint> points;  // sorted by coordinate codes
};
Carrier carrier_of(const LineComplex& lc, const Matrix* ambient_basis);

// Smallest degree <= max_degree whose forms vanishing on pts form a nonzero
// space; nullopt when none does. zero_set_equals_input compares the common
// zero locus of all returned forms with pts; input_is_whole_space flags pts
// = all of P(F^k). Monomials are exponent vectors in lexicographic
// descending order; each form is canonicalized projectively.
struct Hypersurface {
  int degree = 0;
  int solution_dim = 0;
  std::vector<std::vector<int>> monomials;
  std::vector<Vec> forms;
  bool zero_set_equals_input = false;
  bool input_is_whole_space = false;
};
std::optional<Hypersurface> interpolate_hypersurface(
    const FieldPtr& f, int k, const std::vector<Vec>& pts, int max_degree,
    uint64_t cap = 10000000);

// Incidence geometry of the directrices inside P(K0), in k0 coordinates.
struct PairMeet {
  int i = 0, j = 0;
  int dim = 0;  // affine dimension of the intersection
  Vec point;    // canonical representative when dim == 1
};
struct GeometryReport {
  std::vector<int> proj_dims;  // of the coords spaces
  std::vector<int> pole_indices;
  std::optional<bool> poles_collinear;
  std::vector<PairMeet> pairwise;  // pairs with dim >= 1
  std::optional<bool> meet_points_coplanar;
  // Per directrix: do the 0-dimensional pairwise meets lying on it span at
  // most a projective line?
  std::vector<bool> meets_on_directrix_collinear;
};
GeometryReport geometry_report(const DirectrixSystem& sys);

}  // namespace resonance

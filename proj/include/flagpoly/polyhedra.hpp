#ifndef FLAGPOLY_POLYHEDRA_HPP
#define FLAGPOLY_POLYHEDRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

// Closed halfspace a.x <= b in canonical form: a integral with content 1,
// b rational scaled accordingly.
struct HalfSpace {
  IntVec a;
  Rat b;

  bool operator==(const HalfSpace& o) const { return a == o.a && b == o.b; }
  bool operator<(const HalfSpace& o) const;
};

HalfSpace make_halfspace(const RatVec& a, const Rat& b);

// Immutable exact rational polytope carrying both descriptions. The
// halfspace list contains the irredundant facets plus, for lower
// dimensional polytopes, the affine-hull equalities as opposite pairs.
class Polytope {
 public:
  int dim_ambient = 0;
  int dim_affine = -1;
  std::vector<HalfSpace> halfspaces;  // sorted
  RatMat vertices;                    // sorted lex
  IntMat equalities;                  // affine hull rows (e_1..e_d | c), RREF-canonical

  bool contains(const RatVec& x) const;
  bool contains_strictly(const RatVec& x) const;  // every facet strict
  bool is_lattice() const;
  bool operator==(const Polytope& o) const;

  std::string summary() const;
};

// H-representation -> canonical polytope. Throws InvalidInput "empty" /
// "unbounded" when the system is infeasible or has a recession direction.
Polytope from_halfspaces(int dim, const std::vector<HalfSpace>& hs);

// conv(points) -> canonical polytope; non-vertex points are dropped.
Polytope from_points(int dim, const RatMat& points);
Polytope from_points(int dim, const std::vector<IntVec>& points);

// k*P + t for k > 0.
Polytope dilate_translate(const Polytope& p, const Rat& k, const RatVec& t);

// All lattice points (strict = interior points in the ambient sense; empty
// for lower-dimensional polytopes). Sorted lex.
std::vector<IntVec> lattice_points(const Polytope& p, bool strict);

// Polar dual; requires a full-dimensional polytope with 0 in its interior.
Polytope polar_dual(const Polytope& p);

bool is_lattice(const Polytope& p);

// Affine chart identifying (affine hull of P) cap Z^d with Z^k.
struct AffineChart {
  int ambient_dim = 0;
  int dim = 0;
  IntVec origin;  // integer point on the affine hull
  IntMat basis;   // rows: lattice basis of the direction lattice
  RatVec project(const RatVec& ambient_point) const;
  RatVec embed(const RatVec& chart_point) const;
  IntVec embed(const IntVec& chart_point) const;

  // internal solve data
  std::vector<int> solve_cols;
  RatMat solve_inverse;
};

// Throws InvalidInput when the affine hull contains no integer point.
AffineChart affine_lattice_chart(const Polytope& p);
Polytope project_to_chart(const Polytope& p, const AffineChart& chart);

enum class ReflexiveFailure { none, not_lattice, interior_count, dual_not_lattice };

std::string to_string(ReflexiveFailure f);

struct ReflexivityResult {
  bool reflexive = false;
  ReflexiveFailure reason = ReflexiveFailure::none;
  IntVec translation;             // ambient coordinates of the interior point
  Int interior_points = 0;        // count found (when lattice)
  std::optional<Polytope> dual;   // in chart coordinates when P is lower-dim
};

// Main-Theorem geometry: lower-dimensional polytopes are handled inside the
// affine lattice of their affine hull.
ReflexivityResult reflexive_after_translation(const Polytope& p);

// Interior lattice points in the Main-Theorem sense: strict points of the
// chart projection for lower-dimensional P, ambient strict points otherwise.
// Returned in ambient coordinates.
std::vector<IntVec> interior_lattice_points_affine(const Polytope& p);

}  // namespace flagpoly

#endif

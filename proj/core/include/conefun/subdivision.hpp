#ifndef CONEFUN_SUBDIVISION_HPP
#define CONEFUN_SUBDIVISION_HPP

#include "conefun/cone.hpp"
#include "conefun/exact.hpp"

#include <cstdint>
#include <vector>

namespace conefun {

/// Simplicial cone of dimension k sitting in Z^r, k <= r.
struct SimplicialCone {
  std::vector<IntVec> generators;  // k linearly independent primitive vectors
  int parent_dim = 0;              // r

  int dim() const { return static_cast<int>(generators.size()); }
  Int mult() const;  // |det| within the saturation of the span
};

/// One term of the inclusion-exclusion decomposition: a standard simplicial
/// cone of dimension k with sign (-1)^{r-k}, together with the unimodular
/// change of basis sending its generators to the first k basis vectors.
struct SignedTerm {
  std::vector<IntVec> generators;
  int dim = 0;
  int sign = 1;
  /// A in GL_r(Z) with A·g_j = e_j for each generator g_j.
  IntMat to_standard;

  // int64 mirrors for enumeration and evaluation loops
  std::vector<std::vector<std::int64_t>> gens_i64;
  std::vector<std::vector<std::int64_t>> to_standard_i64;

  /// Lattice membership of p in the closed cone (strict: relative interior).
  bool member(const std::vector<std::int64_t>& p, bool strict) const;
};

/// Signed decomposition of a cone into standard simplicial cones of all
/// dimensions: top cones with sign +1, interior faces of dimension k with
/// sign (-1)^{r-k}, faces in the boundary of the source excluded.  The
/// signed count of any lattice point (closed-cone membership) equals the
/// indicator of the source cone; with relative-interior membership and all
/// signs +1 it equals the indicator of the open cone.
struct SignedComplex {
  Cone source;
  std::vector<SignedTerm> terms;

  /// Σ sign over closed terms containing p; equals [p ∈ source] exactly.
  int signed_count(const std::vector<std::int64_t>& p) const;
  /// Σ 1 over relative interiors containing p; equals [p ∈ source°] exactly.
  int interior_count(const std::vector<std::int64_t>& p) const;
};

/// Unimodular subdivision: top-dimensional standard simplicial cones tiling
/// C, meeting face to face.  Requires C good; throws NotGood.
std::vector<SimplicialCone> unimodular_subdivide(const Cone& c);

/// Unimodular subdivision none of whose cones has rho as a generating ray.
/// rho must be a primitive ray of C distinct from every generator; throws
/// RayIsGenerator / RayOutsideCone.
std::vector<SimplicialCone> subdivide_avoiding_ray(const Cone& c, const IntVec& rho);

/// Unimodular subdivision that passes through the given lattice point
/// (stellar insertion of the ray, then multiplicity reduction).  Used to
/// produce a second, distinct subdivision of the same cone.
std::vector<SimplicialCone> subdivide_through_point(const Cone& c, const IntVec& u);

/// Builds the signed inclusion-exclusion complex from a unimodular
/// subdivision.  Validates the pieces on a sampled lattice box and throws
/// InvalidSubdivision when the signed counts do not reproduce membership.
SignedComplex inclusion_exclusion_complex(const Cone& c,
                                          const std::vector<SimplicialCone>& pieces);

/// Convenience: default subdivision plus inclusion-exclusion.
SignedComplex default_signed_complex(const Cone& c);

}  // namespace conefun

#endif  // CONEFUN_SUBDIVISION_HPP

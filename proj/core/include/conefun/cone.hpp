#ifndef CONEFUN_CONE_HPP
#define CONEFUN_CONE_HPP

#include "conefun/exact.hpp"

#include <string>
#include <vector>

namespace conefun {

/// A face of a cone, described by the facet normals vanishing on it.
struct Face {
  int codim = 0;
  /// Indices into Cone::normals of every normal vanishing on the face.
  std::vector<int> incident_normals;
  /// Generators of the cone lying on the face.
  std::vector<IntVec> generators;

  int dim(int ambient) const { return ambient - codim; }
};

/// Strongly convex, full-dimensional rational polyhedral cone.
///
/// Stored with primitive generators (rays) and primitive inward facet
/// normals: x ∈ C iff x·v ≥ 0 for every normal v.  Immutable after
/// construction; all operations on it are pure.
class Cone {
 public:
  int dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const std::vector<IntVec>& normals() const { return normals_; }

  /// int64 mirrors for enumeration-heavy callers.
  const std::vector<std::vector<std::int64_t>>& generators_i64() const { return gens_i64_; }
  const std::vector<std::vector<std::int64_t>>& normals_i64() const { return normals_i64_; }

  bool contains(const IntVec& point, bool strict) const;
  bool contains(const std::vector<std::int64_t>& point, bool strict) const;

  friend Cone make_cone(const std::vector<IntVec>& generators);

 private:
  int dim_ = 0;
  std::vector<IntVec> generators_;
  std::vector<IntVec> normals_;
  std::vector<std::vector<std::int64_t>> gens_i64_;
  std::vector<std::vector<std::int64_t>> normals_i64_;
};

/// Builds a validated cone from integer ray generators: primitivizes,
/// removes redundant rays, enumerates facets, and verifies strong convexity.
/// Throws NotFullDimensional / NotStronglyConvex.
Cone make_cone(const std::vector<IntVec>& generators);

/// The dual cone, generated by the facet normals of C; its normals are the
/// generators of C.
Cone dual_cone(const Cone& c);

/// All faces of the given codimension, 1 <= codim <= dim-1.
std::vector<Face> faces(const Cone& c, int codim);

/// All proper faces (codim 1..dim-1), ordered by (codim, incident normal set).
std::vector<Face> all_proper_faces(const Cone& c);

/// Result of the goodness test.  When good, `certificates` holds one
/// SL_r(Z) matrix per tested face whose leading rows are a Z-basis of the
/// lattice spanned by the face's incident normals (the normals themselves
/// when the face is simple).
struct GoodnessResult {
  bool good = false;
  struct Certificate {
    Face face;
    IntMat completion;  // SL_r(Z), leading rows span the incident normals
  };
  std::vector<Certificate> certificates;
  std::string violating_face;  // set when good == false
};

/// Lattice-saturation ("goodness") test: at every proper face the incident
/// normals must span the lattice points of their real span.  The apex is
/// included only for simplicial cones, where its r normals must form a
/// GL_r(Z) matrix.
GoodnessResult is_good(const Cone& c);

/// |det| of r independent integer vectors; 1 iff the simplicial cone they
/// span is standard.  Throws Degenerate when the determinant vanishes.
Int multiplicity(const std::vector<IntVec>& generators);

/// point·v >= 0 for all normals (strict: > 0, i.e. the interior).
bool contains(const Cone& c, const IntVec& point, bool strict);

}  // namespace conefun

#endif  // CONEFUN_CONE_HPP

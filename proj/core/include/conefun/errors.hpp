#ifndef CONEFUN_ERRORS_HPP
#define CONEFUN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace conefun {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// cone_core
struct NotStronglyConvex : Error { using Error::Error; };
struct NotFullDimensional : Error { using Error::Error; };
struct NonSimpleFace : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };

// subdivision
struct NotGood : Error { using Error::Error; };
struct RayIsGenerator : Error { using Error::Error; };
struct RayOutsideCone : Error { using Error::Error; };
struct InvalidSubdivision : Error { using Error::Error; };

// sl elements
struct NonSimpleRay : Error { using Error::Error; };
struct SingularAction : Error { using Error::Error; };

// cone sums / series
struct NearPole : Error {
  NearPole(const std::string& msg, std::vector<long long> ray, bool generator_of_source)
      : Error(msg), ray(std::move(ray)), generator_of_source(generator_of_source) {}
  /// Lattice ray whose denominator is close to a pole.
  std::vector<long long> ray;
  /// True when the ray is a generator of the source cone, i.e. the pole is
  /// genuine and cannot be removed by resubdividing.
  bool generator_of_source = false;
};
struct DivergentRegion : Error { using Error::Error; };
struct ZeroPeriod : Error { using Error::Error; };

// special functions
struct OnUnitCircle : Error { using Error::Error; };
struct NonConvergent : Error { using Error::Error; };
struct OutsideDomain : Error { using Error::Error; };
struct DegenerateRatios : Error { using Error::Error; };

// verifier
struct HypothesisViolated : Error { using Error::Error; };

}  // namespace conefun

#endif  // CONEFUN_ERRORS_HPP

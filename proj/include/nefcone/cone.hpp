#pragma once

#include <span>
#include <vector>

#include "nefcone/hn_type.hpp"
#include "nefcone/theta.hpp"

namespace nefcone {

/// Class x * O(1) + y * L in NS(Gr_r(E)), where L is the pullback of a
/// degree-one line bundle on the curve.
struct NSClassGr {
  Rational x;
  Rational y;

  friend bool operator==(const NSClassGr&, const NSClassGr&) = default;
};

/// Primitive integer ray (u, v) in the {O(1), L} basis.
struct RayGr {
  Integer u;
  Integer v;

  friend bool operator==(const RayGr&, const RayGr&) = default;
};

/// Scales a non-zero rational vector to the primitive integer vector on the
/// same ray (positive multiple, coordinate gcd 1).
std::vector<Integer> primitive_vector(std::span<const Rational> v);

/// Nef cone of Gr_r(E): spanned by the fiber ray (0,1) and the ray through
/// (p^delta, -theta').
struct ConeDescriptionGr {
  RayGr fiber_ray;
  RayGr theta_ray;
  Rational theta_used;
  Integer p_delta;

  /// Rays in output order: theta ray first, fiber ray last.
  std::vector<RayGr> rays() const { return {theta_ray, fiber_ray}; }
};

ConeDescriptionGr grassmann_nef_cone(const HNType& h, int r,
                                     const FieldContext& ctx = FieldContext::char_zero());

/// x >= 0 and p^delta * y + theta' * x >= 0.
bool is_nef_gr(const NSClassGr& c, const ConeDescriptionGr& cone);
/// Strict interior of the nef cone.
bool is_ample_gr(const NSClassGr& c, const ConeDescriptionGr& cone);

/// Quotient dimensions 0 < r_1 < ... < r_nu.
class FlagType {
 public:
  /// Throws InvalidFlagType when empty, not strictly increasing or < 1.
  static FlagType make(std::vector<int> quotient_dims);

  std::span<const int> quotient_dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }

  friend bool operator==(const FlagType&, const FlagType&) = default;

 private:
  explicit FlagType(std::vector<int> dims) : dims_(std::move(dims)) {}
  std::vector<int> dims_;
};

/// Class sum_i x_i * O_i + y * L' in NS(Fl(E)), O_i pulled back from Gr_{r_i}(E).
struct NSClassFlag {
  std::vector<Rational> x;
  Rational y;

  friend bool operator==(const NSClassFlag&, const NSClassFlag&) = default;
};

struct FlagCone {
  FlagType flag;
  std::vector<Rational> thetas;  // theta'_i = theta(h, r_i)
  Integer p_delta;
  /// nu + 1 primitive rays of length nu + 1; generator i first, fiber ray last.
  std::vector<std::vector<Integer>> rays;
};

FlagCone flag_nef_cone(const HNType& h, const FlagType& fl,
                       const FieldContext& ctx = FieldContext::char_zero());

/// x_i >= 0 for all i and p^delta * y + sum theta'_i x_i >= 0.
/// Throws DimensionMismatch when the class has the wrong length.
bool is_nef_flag(const NSClassFlag& c, const FlagCone& cone);
bool is_ample_flag(const NSClassFlag& c, const FlagCone& cone);

/// Pullback along the projection Fl(E) -> Gr_{r_i}(E), i is 1-based.
NSClassFlag pullback_to_flag(std::size_t i, const NSClassGr& c, const FlagType& fl);

}  // namespace nefcone

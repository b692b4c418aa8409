#pragma once

#include <string_view>

#include "nefcone/cone.hpp"

namespace nefcone {

enum class PositivityClass { Ample, NefNotAmple, NotNef };

/// "ample", "nef_not_ample" or "not_nef".
std::string_view to_string(PositivityClass c);

/// Positivity of the tautological bundle O(1) on Gr_r(E), decided by sign(theta).
PositivityClass classify_tautological(const HNType& h, int r,
                                      const FieldContext& ctx = FieldContext::char_zero());

/// Relative anticanonical class of Gr_r(E) -> X:  n * O(1) - r * deg(E) * L.
///
/// The overload taking a context reads `h` as the type of the delta-th
/// Frobenius pullback, so deg(E) = deg(h) / p^delta.
NSClassGr relative_anticanonical_class(const HNType& h, int r);
NSClassGr relative_anticanonical_class(const HNType& h, int r, const FieldContext& ctx);

/// Nef-cone membership of the relative anticanonical class.
bool anticanonical_is_nef(const HNType& h, int r, const FieldContext& ctx = FieldContext::char_zero());

}  // namespace nefcone

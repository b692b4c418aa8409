#include "nefcone/positivity.hpp"

namespace nefcone {

std::string_view to_string(PositivityClass c) {
  switch (c) {
    case PositivityClass::Ample: return "ample";
    case PositivityClass::NefNotAmple: return "nef_not_ample";
    case PositivityClass::NotNef: return "not_nef";
  }
  return "unknown";
}

PositivityClass classify_tautological(const HNType& h, int r, const FieldContext& ctx) {
  const int sign = theta(h, r, ctx).theta.sign();
  if (sign > 0) return PositivityClass::Ample;
  if (sign == 0) return PositivityClass::NefNotAmple;
  return PositivityClass::NotNef;
}

NSClassGr relative_anticanonical_class(const HNType& h, int r) {
  return relative_anticanonical_class(h, r, FieldContext::char_zero());
}

NSClassGr relative_anticanonical_class(const HNType& h, int r, const FieldContext& ctx) {
  check_quotient_rank(h, r);
  const Rational base_degree = Rational(h.degree(), ctx.frobenius_factor());
  return {Rational(h.rank()), -(Rational(r) * base_degree)};
}

bool anticanonical_is_nef(const HNType& h, int r, const FieldContext& ctx) {
  return is_nef_gr(relative_anticanonical_class(h, r, ctx), grassmann_nef_cone(h, r, ctx));
}

}  // namespace nefcone

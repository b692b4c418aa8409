#include "nefcone/cone.hpp"

#include <string>

namespace nefcone {

std::vector<Integer> primitive_vector(std::span<const Rational> v) {
  Integer common_den = 1;
  for (const auto& q : v) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), q.denominator().get_mpz_t());

  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    out.push_back(q.numerator() * (common_den / q.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) throw Error(Errc::InternalInvariant, "zero vector has no primitive ray");
  for (auto& c : out) c /= g;
  return out;
}

namespace {

Rational boundary_value(const Integer& p_delta, const Rational& y, std::span<const Rational> thetas,
                        std::span<const Rational> xs) {
  Rational value = Rational(p_delta) * y;
  for (std::size_t i = 0; i < xs.size(); ++i) value += thetas[i] * xs[i];
  return value;
}

}  // namespace

ConeDescriptionGr grassmann_nef_cone(const HNType& h, int r, const FieldContext& ctx) {
  ConeDescriptionGr cone;
  cone.theta_used = theta(h, r, ctx).theta;
  cone.p_delta = ctx.frobenius_factor();
  cone.fiber_ray = {Integer(0), Integer(1)};
  const Rational generator[2] = {Rational(cone.p_delta), -cone.theta_used};
  const auto prim = primitive_vector(generator);
  cone.theta_ray = {prim[0], prim[1]};
  return cone;
}

bool is_nef_gr(const NSClassGr& c, const ConeDescriptionGr& cone) {
  return c.x.sign() >= 0 &&
         boundary_value(cone.p_delta, c.y, {&cone.theta_used, 1}, {&c.x, 1}).sign() >= 0;
}

bool is_ample_gr(const NSClassGr& c, const ConeDescriptionGr& cone) {
  return c.x.sign() > 0 &&
         boundary_value(cone.p_delta, c.y, {&cone.theta_used, 1}, {&c.x, 1}).sign() > 0;
}

FlagType FlagType::make(std::vector<int> quotient_dims) {
  if (quotient_dims.empty()) throw Error(Errc::InvalidFlagType, "flag type has no quotient dimensions");
  if (quotient_dims.front() < 1) {
    throw Error(Errc::InvalidFlagType, "quotient dimensions must be >= 1");
  }
  for (std::size_t i = 0; i + 1 < quotient_dims.size(); ++i) {
    if (quotient_dims[i] >= quotient_dims[i + 1]) {
      throw Error(Errc::InvalidFlagType, "quotient dimensions must be strictly increasing");
    }
  }
  return FlagType(std::move(quotient_dims));
}

FlagCone flag_nef_cone(const HNType& h, const FlagType& fl, const FieldContext& ctx) {
  if (fl.quotient_dims().back() >= h.rank()) {
    throw Error(Errc::InvalidFlagType, "largest quotient dimension " +
                                           std::to_string(fl.quotient_dims().back()) +
                                           " must be below rank " + std::to_string(h.rank()));
  }
  FlagCone cone{fl, {}, ctx.frobenius_factor(), {}};
  const std::size_t nu = fl.size();
  for (int r : fl.quotient_dims()) cone.thetas.push_back(theta(h, r, ctx).theta);

  for (std::size_t i = 0; i < nu; ++i) {
    std::vector<Rational> generator(nu + 1);
    generator[i] = Rational(cone.p_delta);
    generator[nu] = -cone.thetas[i];
    cone.rays.push_back(primitive_vector(generator));
  }
  std::vector<Integer> fiber(nu + 1, Integer(0));
  fiber[nu] = 1;
  cone.rays.push_back(std::move(fiber));
  return cone;
}

namespace {

void check_flag_dims(const NSClassFlag& c, const FlagCone& cone) {
  if (c.x.size() != cone.flag.size()) {
    throw Error(Errc::DimensionMismatch, "class has " + std::to_string(c.x.size()) +
                                             " flag coordinates, cone expects " +
                                             std::to_string(cone.flag.size()));
  }
}

}  // namespace

bool is_nef_flag(const NSClassFlag& c, const FlagCone& cone) {
  check_flag_dims(c, cone);
  for (const auto& xi : c.x) {
    if (xi.sign() < 0) return false;
  }
  return boundary_value(cone.p_delta, c.y, cone.thetas, c.x).sign() >= 0;
}

bool is_ample_flag(const NSClassFlag& c, const FlagCone& cone) {
  check_flag_dims(c, cone);
  for (const auto& xi : c.x) {
    if (xi.sign() <= 0) return false;
  }
  return boundary_value(cone.p_delta, c.y, cone.thetas, c.x).sign() > 0;
}

NSClassFlag pullback_to_flag(std::size_t i, const NSClassGr& c, const FlagType& fl) {
  if (i < 1 || i > fl.size()) {
    throw Error(Errc::IndexOutOfRange, "flag index " + std::to_string(i) + " outside [1, " +
                                           std::to_string(fl.size()) + "]");
  }
  NSClassFlag out{std::vector<Rational>(fl.size()), c.y};
  out.x[i - 1] = c.x;
  return out;
}

}  // namespace nefcone

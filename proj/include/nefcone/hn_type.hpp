#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "nefcone/error.hpp"
#include "nefcone/rational.hpp"

namespace nefcone {

/// One graded piece of a Harder–Narasimhan filtration: a semistable bundle of
/// the given rank and degree.
struct HNPiece {
  int rank = 1;
  Integer degree;

  Rational slope() const { return Rational(degree, rank); }

  friend bool operator==(const HNPiece&, const HNPiece&) = default;
};

/// Numerical Harder–Narasimhan type: graded pieces listed from the maximal
/// destabilizing piece downwards, with strictly decreasing slopes.
class HNType {
 public:
  /// Validates and builds. Throws Error with EmptyType, NonPositiveRank or
  /// NonDecreasingSlopes. Equal-slope neighbours are rejected, never merged.
  static HNType make(std::vector<HNPiece> pieces);

  std::span<const HNPiece> pieces() const { return pieces_; }
  const HNPiece& piece(std::size_t i) const { return pieces_.at(i); }

  /// Number of graded pieces.
  std::size_t length() const { return pieces_.size(); }

  int rank() const { return rank_; }
  const Integer& degree() const { return degree_; }
  Rational slope() const { return Rational(degree_, rank_); }

  bool is_semistable() const { return pieces_.size() == 1; }

  friend bool operator==(const HNType& a, const HNType& b) { return a.pieces_ == b.pieces_; }

 private:
  explicit HNType(std::vector<HNPiece> pieces);

  std::vector<HNPiece> pieces_;
  int rank_ = 0;
  Integer degree_;
};

HNType make_hn_type(std::vector<HNPiece> pieces);

struct GlobalInvariants {
  int rank = 0;
  Integer degree;
  Rational slope;
};

GlobalInvariants global_invariants(const HNType& h);

struct CharZero {
  friend bool operator==(const CharZero&, const CharZero&) = default;
};

/// Characteristic p > 0 with `delta` Frobenius steps. The accompanying HN type
/// is understood to be that of the delta-th Frobenius pullback, with strongly
/// semistable graded pieces.
struct CharP {
  long p = 2;
  long delta = 0;

  friend bool operator==(const CharP&, const CharP&) = default;
};

class FieldContext {
 public:
  FieldContext() = default;

  static FieldContext char_zero() { return FieldContext(); }
  /// Throws InvalidFieldContext unless p is prime and delta >= 0.
  static FieldContext char_p(long p, long delta);

  bool is_char_zero() const { return std::holds_alternative<CharZero>(value_); }
  const std::variant<CharZero, CharP>& value() const { return value_; }

  long characteristic() const;
  long frobenius_steps() const;

  /// p^delta in positive characteristic, 1 in characteristic zero.
  Integer frobenius_factor() const;

  friend bool operator==(const FieldContext&, const FieldContext&) = default;

 private:
  explicit FieldContext(CharP cp) : value_(cp) {}

  std::variant<CharZero, CharP> value_;
};

/// Degrees a_j of a bundle O(a_1) + ... + O(a_k) on the projective line.
struct SplittingType {
  std::vector<Integer> summand_degrees;
};

/// Sorts degrees descending and groups equal values into one piece each.
HNType hn_from_splitting_type(const SplittingType& st);

HNType dual(const HNType& h);

/// Tensor by a line bundle of degree m.
HNType twist(const HNType& h, const Integer& m);

/// Degrees scale by p^delta. Throws CharZeroContext in characteristic zero.
HNType frobenius_pullback(const HNType& h, const FieldContext& ctx);

/// Pullback along a finite cover of degree m >= 1 (NonPositiveCoverDegree otherwise).
HNType cover_pullback(const HNType& h, const Integer& m);

/// Every HN type with total rank <= max_rank and piece degrees in
/// [-max_abs_degree, max_abs_degree], in a fixed deterministic order.
std::vector<HNType> enumerate_hn_types(int max_rank, int max_abs_degree);

}  // namespace nefcone

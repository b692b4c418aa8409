#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nefcone/hn_type.hpp"

namespace nefcone {

/// Every intermediate quantity behind theta_{E,r}. Indices are 1-based.
struct ThetaBreakdown {
  int r = 0;
  int t = 0;
  int tail_rank = 0;     // rank of E / V_t
  Integer tail_degree;   // degree of E / V_t
  int s = 0;             // r - tail_rank, always in [1, rank(V_t / V_{t-1})]
  Rational mu_t;
  Rational theta;        // s * mu_t + tail_degree
};

/// a_i pieces taken from the i-th graded piece; 0 <= a_i <= r_i and sum a_i = r.
using Composition = std::vector<int>;

/// V_a = tensor over i of the a_i-th exterior power of the i-th graded piece.
struct VaBundle {
  Composition composition;
  Integer rank;        // prod binom(r_i, a_i)
  Integer degree;      // rank * slope_sum, computed in integers
  Rational slope_sum;  // sum a_i mu_i
};

/// Throws QuotientRankOutOfRange unless 1 <= r <= rank(h) - 1.
void check_quotient_rank(const HNType& h, int r);

/// Largest t in [1, d] with r_t + ... + r_d >= r.
int threshold_index(const HNType& h, int r);

/// `ctx` does not change the arithmetic: in positive characteristic `h` is
/// already the Frobenius-stabilized type.
ThetaBreakdown theta(const HNType& h, int r, const FieldContext& ctx = FieldContext::char_zero());

/// Streams every composition of r bounded by the piece ranks, in
/// lexicographic order, without materializing the list.
void for_each_composition(const HNType& h, int r,
                          const std::function<void(std::span<const int>)>& visit);

std::vector<VaBundle> enumerate_va(const HNType& h, int r);

/// Exhaustive minimum of sum a_i mu_i over all compositions.
Rational theta_oracle(const HNType& h, int r);

Integer binomial(int n, int k);

}  // namespace nefcone

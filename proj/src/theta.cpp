#include "nefcone/theta.hpp"

#include <optional>
#include <string>

namespace nefcone {

void check_quotient_rank(const HNType& h, int r) {
  if (r < 1 || r >= h.rank()) {
    throw Error(Errc::QuotientRankOutOfRange,
                "quotient rank " + std::to_string(r) + " outside [1, " +
                    std::to_string(h.rank() - 1) + "]");
  }
}

int threshold_index(const HNType& h, int r) {
  check_quotient_rank(h, r);
  const auto pieces = h.pieces();
  int tail = 0;
  for (int t = static_cast<int>(pieces.size()); t >= 1; --t) {
    tail += pieces[t - 1].rank;
    if (tail >= r) return t;
  }
  // Unreachable: the full sum is rank(h) > r.
  throw Error(Errc::InternalInvariant, "threshold index not found");
}

ThetaBreakdown theta(const HNType& h, int r, const FieldContext& /*ctx*/) {
  const int t = threshold_index(h, r);
  const auto pieces = h.pieces();

  ThetaBreakdown out;
  out.r = r;
  out.t = t;
  for (std::size_t i = t; i < pieces.size(); ++i) {
    out.tail_rank += pieces[i].rank;
    out.tail_degree += pieces[i].degree;
  }
  out.s = r - out.tail_rank;
  out.mu_t = pieces[t - 1].slope();
  out.theta = Rational(out.s) * out.mu_t + Rational(out.tail_degree);
  return out;
}

void for_each_composition(const HNType& h, int r,
                          const std::function<void(std::span<const int>)>& visit) {
  check_quotient_rank(h, r);
  const auto pieces = h.pieces();
  const std::size_t d = pieces.size();

  // capacity_after[i] = r_{i+1} + ... + r_d (0-based), used to prune dead prefixes.
  std::vector<int> capacity_after(d + 1, 0);
  for (std::size_t i = d; i-- > 0;) capacity_after[i] = capacity_after[i + 1] + pieces[i].rank;

  Composition a(d, 0);
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == d) {
      if (remaining == 0) visit(a);
      return;
    }
    for (int take = 0; take <= pieces[i].rank && take <= remaining; ++take) {
      if (remaining - take > capacity_after[i + 1]) continue;
      a[i] = take;
      self(self, i + 1, remaining - take);
    }
    a[i] = 0;
  };
  recurse(recurse, 0, r);
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<VaBundle> enumerate_va(const HNType& h, int r) {
  const auto pieces = h.pieces();
  std::vector<VaBundle> out;
  for_each_composition(h, r, [&](std::span<const int> a) {
    VaBundle va;
    va.composition.assign(a.begin(), a.end());
    va.rank = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      va.rank *= binomial(pieces[i].rank, a[i]);
      va.slope_sum += Rational(a[i]) * pieces[i].slope();
    }
    // deg(tensor product) = sum_i deg(wedge^{a_i} V_i) * prod_{j != i} rank(wedge^{a_j} V_j),
    // with deg(wedge^k V) = binom(rank V - 1, k - 1) * deg V.
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      Integer term = binomial(pieces[i].rank - 1, a[i] - 1) * pieces[i].degree;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != i) term *= binomial(pieces[j].rank, a[j]);
      }
      va.degree += term;
    }
    out.push_back(std::move(va));
  });
  return out;
}

Rational theta_oracle(const HNType& h, int r) {
  const auto pieces = h.pieces();
  std::optional<Rational> best;
  for_each_composition(h, r, [&](std::span<const int> a) {
    Rational sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum += Rational(a[i]) * pieces[i].slope();
    if (!best || sum < *best) best = std::move(sum);
  });
  if (!best) throw Error(Errc::InternalInvariant, "no composition enumerated");
  return *best;
}

}  // namespace nefcone

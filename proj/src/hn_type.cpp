#include "nefcone/hn_type.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace nefcone {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyType: return "EmptyType";
    case Errc::NonDecreasingSlopes: return "NonDecreasingSlopes";
    case Errc::NonPositiveRank: return "NonPositiveRank";
    case Errc::InvalidFieldContext: return "InvalidFieldContext";
    case Errc::CharZeroContext: return "CharZeroContext";
    case Errc::NonPositiveCoverDegree: return "NonPositiveCoverDegree";
    case Errc::QuotientRankOutOfRange: return "QuotientRankOutOfRange";
    case Errc::InvalidFlagType: return "InvalidFlagType";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

HNType::HNType(std::vector<HNPiece> pieces) : pieces_(std::move(pieces)) {
  for (const auto& piece : pieces_) {
    rank_ += piece.rank;
    degree_ += piece.degree;
  }
}

HNType HNType::make(std::vector<HNPiece> pieces) {
  if (pieces.empty()) throw Error(Errc::EmptyType, "HN type has no pieces");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].rank < 1) {
      throw Error(Errc::NonPositiveRank,
                  "piece " + std::to_string(i + 1) + " has rank " + std::to_string(pieces[i].rank));
    }
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i].slope() <= pieces[i + 1].slope()) {
      throw Error(Errc::NonDecreasingSlopes,
                  "slope of piece " + std::to_string(i + 1) + " (" + pieces[i].slope().to_string() +
                      ") is not greater than slope of piece " + std::to_string(i + 2) + " (" +
                      pieces[i + 1].slope().to_string() + ")");
    }
  }
  return HNType(std::move(pieces));
}

HNType make_hn_type(std::vector<HNPiece> pieces) { return HNType::make(std::move(pieces)); }

GlobalInvariants global_invariants(const HNType& h) { return {h.rank(), h.degree(), h.slope()}; }

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

template <typename F>
HNType map_pieces(const HNType& h, F&& f) {
  std::vector<HNPiece> out;
  out.reserve(h.length());
  for (const auto& piece : h.pieces()) out.push_back(f(piece));
  return HNType::make(std::move(out));
}

}  // namespace

FieldContext FieldContext::char_p(long p, long delta) {
  if (!is_prime(p)) {
    throw Error(Errc::InvalidFieldContext, "characteristic " + std::to_string(p) + " is not prime");
  }
  if (delta < 0) {
    throw Error(Errc::InvalidFieldContext,
                "Frobenius steps must be non-negative, got " + std::to_string(delta));
  }
  return FieldContext(CharP{p, delta});
}

long FieldContext::characteristic() const {
  if (const auto* cp = std::get_if<CharP>(&value_)) return cp->p;
  return 0;
}

long FieldContext::frobenius_steps() const {
  if (const auto* cp = std::get_if<CharP>(&value_)) return cp->delta;
  return 0;
}

Integer FieldContext::frobenius_factor() const {
  if (const auto* cp = std::get_if<CharP>(&value_)) {
    return ipow(Integer(cp->p), static_cast<unsigned long>(cp->delta));
  }
  return Integer(1);
}

HNType hn_from_splitting_type(const SplittingType& st) {
  if (st.summand_degrees.empty()) throw Error(Errc::EmptyType, "splitting type has no summands");
  std::map<Integer, int, std::greater<>> multiplicity;
  for (const auto& a : st.summand_degrees) ++multiplicity[a];
  std::vector<HNPiece> pieces;
  pieces.reserve(multiplicity.size());
  for (const auto& [a, m] : multiplicity) pieces.push_back({m, Integer(a * m)});
  return HNType::make(std::move(pieces));
}

HNType dual(const HNType& h) {
  std::vector<HNPiece> out(h.pieces().rbegin(), h.pieces().rend());
  for (auto& piece : out) piece.degree = -piece.degree;
  return HNType::make(std::move(out));
}

HNType twist(const HNType& h, const Integer& m) {
  return map_pieces(h, [&](const HNPiece& p) { return HNPiece{p.rank, p.degree + p.rank * m}; });
}

HNType frobenius_pullback(const HNType& h, const FieldContext& ctx) {
  if (ctx.is_char_zero()) {
    throw Error(Errc::CharZeroContext, "Frobenius pullback requires positive characteristic");
  }
  const Integer factor = ctx.frobenius_factor();
  return map_pieces(h, [&](const HNPiece& p) { return HNPiece{p.rank, p.degree * factor}; });
}

HNType cover_pullback(const HNType& h, const Integer& m) {
  if (m < 1) {
    throw Error(Errc::NonPositiveCoverDegree, "cover degree must be >= 1, got " + m.get_str());
  }
  return map_pieces(h, [&](const HNPiece& p) { return HNPiece{p.rank, p.degree * m}; });
}

std::vector<HNType> enumerate_hn_types(int max_rank, int max_abs_degree) {
  std::vector<HNType> out;
  std::vector<HNPiece> prefix;
  // Extends `prefix` by pieces of slope strictly below the last one.
  std::function<void(int)> extend = [&](int remaining) {
    for (int rank = 1; rank <= remaining; ++rank) {
      for (int deg = max_abs_degree; deg >= -max_abs_degree; --deg) {
        HNPiece next{rank, Integer(deg)};
        if (!prefix.empty() && prefix.back().slope() <= next.slope()) continue;
        prefix.push_back(next);
        out.push_back(HNType::make(prefix));
        extend(remaining - rank);
        prefix.pop_back();
      }
    }
  };
  extend(max_rank);
  std::stable_sort(out.begin(), out.end(),
                   [](const HNType& a, const HNType& b) { return a.rank() < b.rank(); });
  return out;
}

}  // namespace nefcone

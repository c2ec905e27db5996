#ifndef FIBERCONE_IDEAL_HPP
#define FIBERCONE_IDEAL_HPP

#include <cstdint>
#include <vector>

#include "fibercone/subspace.hpp"

namespace fibercone {

/// An ideal of the truncated ring, held through its generators, with cached
/// echelon bases for the powers I^n and the products m*I^n. Caches grow
/// monotonically and are filled sequentially.
class IdealHandle {
public:
  // Zero generators are dropped; an empty remainder is the zero ideal and is
  // rejected (the analysis handles regular, hence nonzero, ideals).
  IdealHandle(ContextPtr ctx, std::vector<SeriesElement> generators);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<SeriesElement>& generators() const { return gens_; }
  std::int64_t valuation() const { return valuation_; }

  // I^n (I^0 is the whole truncated ring).
  const Subspace& power(std::int64_t n) const;

  // m * I^n, with m the maximal ideal (t^g for the semigroup generators).
  const Subspace& mTimesPower(std::int64_t n) const;

private:
  ContextPtr ctx_;
  std::vector<SeriesElement> gens_;
  std::vector<SeriesElement> maximalIdealGens_;
  std::int64_t valuation_ = 0;
  mutable std::vector<Subspace> powers_;
  mutable std::vector<Subspace> mPowers_;
};

// Echelon basis of the ideal generated by the given elements.
Subspace spanIdeal(const ContextPtr& ctx, const std::vector<SeriesElement>& generators);

}  // namespace fibercone

#endif

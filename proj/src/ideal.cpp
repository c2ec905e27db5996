#include "fibercone/ideal.hpp"

#include <algorithm>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

// Span of the product of an ideal (given by its echelon basis) with the
// ideal generated by `factors`.
Subspace productSpan(const ContextPtr& ctx, const Subspace& base,
                     const std::vector<SeriesElement>& factors) {
  RowEchelon elim(ctx->dimension(), ctx->characteristic);
  for (const SeriesElement& g : factors) {
    for (Eigen::Index i = 0; i < base.rows().rows(); ++i) {
      elim.insert(multiplyRowByElement(ctx, base.rows().row(i), g));
    }
  }
  return Subspace::fromEchelon(ctx, elim.finalize());
}

}  // namespace

IdealHandle::IdealHandle(ContextPtr ctx, std::vector<SeriesElement> generators)
    : ctx_(std::move(ctx)) {
  for (SeriesElement& g : generators) {
    if (!g.isZero()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) {
    throw InputError("zero ideal: every generator vanishes");
  }
  valuation_ = gens_.front().valuation().value();
  for (const SeriesElement& g : gens_) {
    valuation_ = std::min(valuation_, g.valuation().value());
  }
  for (std::int64_t g : ctx_->semigroup.generators()) {
    if (g <= ctx_->workingDegree) {
      maximalIdealGens_.push_back(SeriesElement::monomial(ctx_, g));
    }
  }
  powers_.push_back(Subspace::full(ctx_));
}

const Subspace& IdealHandle::power(std::int64_t n) const {
  if (n < 0) throw InternalError("negative ideal power");
  while (static_cast<std::int64_t>(powers_.size()) <= n) {
    powers_.push_back(productSpan(ctx_, powers_.back(), gens_));
  }
  return powers_[static_cast<std::size_t>(n)];
}

const Subspace& IdealHandle::mTimesPower(std::int64_t n) const {
  if (n < 0) throw InternalError("negative ideal power");
  while (static_cast<std::int64_t>(mPowers_.size()) <= n) {
    const auto k = static_cast<std::int64_t>(mPowers_.size());
    mPowers_.push_back(productSpan(ctx_, power(k), maximalIdealGens_));
  }
  return mPowers_[static_cast<std::size_t>(n)];
}

Subspace spanIdeal(const ContextPtr& ctx, const std::vector<SeriesElement>& generators) {
  std::vector<SeriesElement> gens;
  for (const SeriesElement& g : generators) {
    if (!g.isZero()) gens.push_back(g);
  }
  if (gens.empty()) throw InputError("zero ideal: every generator vanishes");
  return productSpan(ctx, Subspace::full(ctx), gens);
}

}  // namespace fibercone

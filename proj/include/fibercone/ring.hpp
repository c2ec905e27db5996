#ifndef FIBERCONE_RING_HPP
#define FIBERCONE_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibercone/semigroup.hpp"

namespace fibercone {

namespace gfp {

// Residue in [0, p).
inline std::int64_t normalize(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t inverse(std::int64_t a, std::int64_t p);
bool isPrime(std::int64_t p);

}  // namespace gfp

/// Shared arithmetic context: the semigroup, the prime characteristic and the
/// working degree W. Every element and subspace of one analysis window refers
/// to the same context; contexts are immutable and shared by pointer.
struct RingContext {
  NumericalSemigroup semigroup;
  std::int64_t characteristic;
  std::int64_t workingDegree;
  std::vector<std::int64_t> exponents;      // monomialsUpTo(S, W), ascending
  std::vector<std::int32_t> indexOfExponent;  // size W+1, -1 where absent

  std::int64_t dimension() const { return static_cast<std::int64_t>(exponents.size()); }
  std::int32_t indexOf(std::int64_t exponent) const {
    if (exponent < 0 || exponent > workingDegree) return -1;
    return indexOfExponent[static_cast<std::size_t>(exponent)];
  }
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr makeContext(NumericalSemigroup semigroup, std::int64_t characteristic,
                       std::int64_t workingDegree);

/// Window-independent element data: exponent -> nonzero coefficient mod p,
/// validated against a semigroup. Produced by the parser, bound to a context
/// per analysis window.
struct RawSeries {
  std::string text;  // normalized rendering, e.g. "t^8 + t^57"
  std::map<std::int64_t, std::int64_t> terms;

  bool isZero() const { return terms.empty(); }
  std::int64_t maxExponent() const { return terms.empty() ? 0 : terms.rbegin()->first; }
  std::optional<std::int64_t> valuation() const {
    if (terms.empty()) return std::nullopt;
    return terms.begin()->first;
  }
  bool operator==(const RawSeries& o) const { return terms == o.terms; }
};

// Grammar: sum of terms `[coeff *] t^exp`, integer coeff (default 1), terms
// joined by + or -. Exponents must lie in S; coefficients are reduced mod p.
RawSeries parseSeries(std::string_view text, const NumericalSemigroup& s, std::int64_t p);

std::string formatSeries(const std::map<std::int64_t, std::int64_t>& terms);

/// Truncated element of k[[t^S]]: sparse exponent -> coefficient map with all
/// exponents in S and <= the context working degree. Values are immutable.
class SeriesElement {
public:
  explicit SeriesElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  SeriesElement(ContextPtr ctx, std::map<std::int64_t, std::int64_t> terms);

  static SeriesElement fromRaw(const ContextPtr& ctx, const RawSeries& raw);
  static SeriesElement monomial(const ContextPtr& ctx, std::int64_t exponent,
                                std::int64_t coeff = 1);

  const ContextPtr& context() const { return ctx_; }
  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::optional<std::int64_t> valuation() const;  // nullopt encodes +infinity

  SeriesElement add(const SeriesElement& other) const;
  SeriesElement scalarMul(std::int64_t c) const;
  SeriesElement mul(const SeriesElement& other) const;
  SeriesElement power(std::int64_t n) const;

  std::string toString() const { return formatSeries(terms_); }
  bool operator==(const SeriesElement& o) const { return terms_ == o.terms_; }

private:
  void requireSameContext(const SeriesElement& other) const;

  ContextPtr ctx_;
  std::map<std::int64_t, std::int64_t> terms_;
};

}  // namespace fibercone

#endif

#include "fibercone/ring.hpp"

#include <cctype>
#include <utility>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace gfp {

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  a = normalize(a, p);
  if (a == 0) throw InternalError("inverse of zero mod " + std::to_string(p));
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return normalize(s0, p);
}

bool isPrime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace gfp

ContextPtr makeContext(NumericalSemigroup semigroup, std::int64_t characteristic,
                       std::int64_t workingDegree) {
  if (!gfp::isPrime(characteristic)) {
    throw InputError("characteristic " + std::to_string(characteristic) + " is not prime");
  }
  if (workingDegree < 0) throw InputError("working degree must be non-negative");
  RingContext ctx{std::move(semigroup), characteristic, workingDegree, {}, {}};
  ctx.exponents = ctx.semigroup.monomialsUpTo(workingDegree);
  ctx.indexOfExponent.assign(static_cast<std::size_t>(workingDegree) + 1, -1);
  for (std::size_t i = 0; i < ctx.exponents.size(); ++i) {
    ctx.indexOfExponent[static_cast<std::size_t>(ctx.exponents[i])] =
        static_cast<std::int32_t>(i);
  }
  return std::make_shared<const RingContext>(std::move(ctx));
}

//////////////////////////
// Element text grammar //
//////////////////////////

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }
};

std::int64_t parseInteger(Cursor& c) {
  c.skipSpace();
  std::size_t start = c.pos;
  if (c.pos < c.text.size() && (c.text[c.pos] == '+' || c.text[c.pos] == '-')) ++c.pos;
  std::size_t digits = 0;
  std::int64_t value = 0;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
    value = value * 10 + (c.text[c.pos] - '0');
    if (value > (std::int64_t{1} << 60)) throw ParseError("integer literal too large", start);
    ++c.pos;
    ++digits;
  }
  if (digits == 0) throw ParseError("expected an integer", c.pos);
  return c.text[start] == '-' ? -value : value;
}

}  // namespace

RawSeries parseSeries(std::string_view text, const NumericalSemigroup& s, std::int64_t p) {
  if (!gfp::isPrime(p)) {
    throw InputError("characteristic " + std::to_string(p) + " is not prime");
  }
  Cursor c{text};
  std::map<std::int64_t, std::int64_t> terms;
  bool first = true;
  while (!c.done()) {
    std::int64_t sign = 1;
    if (!first) {
      char op = c.peek();
      if (op == '+') {
        ++c.pos;
      } else if (op == '-') {
        sign = -1;
        ++c.pos;
      } else {
        throw ParseError("expected '+' or '-' between terms", c.pos);
      }
      c.skipSpace();
    }
    first = false;
    if (c.done()) throw ParseError("dangling operator", c.pos);

    std::int64_t coeff = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = parseInteger(c);
      c.skipSpace();
      if (c.pos < c.text.size() && c.text[c.pos] == '*') {
        ++c.pos;
        c.skipSpace();
      }
    }
    if (c.pos >= c.text.size() || c.text[c.pos] != 't') {
      throw ParseError("expected 't'", c.pos);
    }
    ++c.pos;
    if (c.pos >= c.text.size() || c.text[c.pos] != '^') {
      throw ParseError("expected '^' after 't'", c.pos);
    }
    ++c.pos;
    std::size_t expPos = c.pos;
    std::int64_t exponent = parseInteger(c);
    if (exponent < 0) throw ParseError("exponent must be non-negative", expPos);
    if (!s.contains(exponent)) {
      throw ParseError("exponent " + std::to_string(exponent) + " outside semigroup", expPos);
    }
    std::int64_t v = gfp::normalize(terms[exponent] + sign * coeff, p);
    if (v == 0) {
      terms.erase(exponent);
    } else {
      terms[exponent] = v;
    }
  }
  return RawSeries{formatSeries(terms), std::move(terms)};
}

std::string formatSeries(const std::map<std::int64_t, std::int64_t>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += "t^" + std::to_string(e);
  }
  return out;
}

////////////////////
// SeriesElement  //
////////////////////

SeriesElement::SeriesElement(ContextPtr ctx, std::map<std::int64_t, std::int64_t> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_) {
    if (e < 0 || e > ctx_->workingDegree || ctx_->indexOf(e) < 0) {
      throw InternalError("series term exponent " + std::to_string(e) +
                          " outside the context window");
    }
    if (c <= 0 || c >= ctx_->characteristic) {
      throw InternalError("series coefficient not normalized");
    }
  }
}

SeriesElement SeriesElement::fromRaw(const ContextPtr& ctx, const RawSeries& raw) {
  std::map<std::int64_t, std::int64_t> kept;
  for (const auto& [e, c] : raw.terms) {
    if (e <= ctx->workingDegree) kept.emplace(e, gfp::normalize(c, ctx->characteristic));
  }
  return SeriesElement(ctx, std::move(kept));
}

SeriesElement SeriesElement::monomial(const ContextPtr& ctx, std::int64_t exponent,
                                      std::int64_t coeff) {
  coeff = gfp::normalize(coeff, ctx->characteristic);
  std::map<std::int64_t, std::int64_t> terms;
  if (coeff != 0 && exponent <= ctx->workingDegree) terms.emplace(exponent, coeff);
  return SeriesElement(ctx, std::move(terms));
}

std::optional<std::int64_t> SeriesElement::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

void SeriesElement::requireSameContext(const SeriesElement& other) const {
  if (ctx_ != other.ctx_) {
    throw InternalError("series operands belong to different ring contexts");
  }
}

SeriesElement SeriesElement::add(const SeriesElement& other) const {
  requireSameContext(other);
  std::map<std::int64_t, std::int64_t> out = terms_;
  const std::int64_t p = ctx_->characteristic;
  for (const auto& [e, c] : other.terms_) {
    std::int64_t v = gfp::normalize(out[e] + c, p);
    if (v == 0) {
      out.erase(e);
    } else {
      out[e] = v;
    }
  }
  return SeriesElement(ctx_, std::move(out));
}

SeriesElement SeriesElement::scalarMul(std::int64_t c) const {
  const std::int64_t p = ctx_->characteristic;
  c = gfp::normalize(c, p);
  std::map<std::int64_t, std::int64_t> out;
  if (c != 0) {
    for (const auto& [e, v] : terms_) {
      std::int64_t w = gfp::normalize(v * c, p);
      if (w != 0) out.emplace(e, w);
    }
  }
  return SeriesElement(ctx_, std::move(out));
}

SeriesElement SeriesElement::mul(const SeriesElement& other) const {
  requireSameContext(other);
  const std::int64_t p = ctx_->characteristic;
  const std::int64_t w = ctx_->workingDegree;
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      std::int64_t e = e1 + e2;
      if (e > w) break;  // other.terms_ ascending
      std::int64_t v = gfp::normalize(out[e] + c1 * c2, p);
      if (v == 0) {
        out.erase(e);
      } else {
        out[e] = v;
      }
    }
  }
  return SeriesElement(ctx_, std::move(out));
}

SeriesElement SeriesElement::power(std::int64_t n) const {
  if (n < 0) throw InputError("negative power of a series element");
  SeriesElement acc = SeriesElement::monomial(ctx_, 0, 1);
  for (std::int64_t i = 0; i < n; ++i) acc = acc.mul(*this);
  return acc;
}

}  // namespace fibercone

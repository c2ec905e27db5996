#include "fibercone/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

std::vector<bool> sieveUpTo(const std::vector<std::int64_t>& gens, std::int64_t bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
  in[0] = true;
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (std::int64_t g : gens) {
      if (g <= n && in[static_cast<std::size_t>(n - g)]) {
        in[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return in;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
  for (std::int64_t g : generators) {
    if (g <= 0) throw SemigroupError("semigroup generators must be positive");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.empty()) throw SemigroupError("semigroup needs at least one generator");

  std::int64_t g = 0;
  for (std::int64_t x : generators) g = std::gcd(g, x);
  if (g != 1) {
    throw SemigroupError("invalid semigroup: gcd of generators is " + std::to_string(g) +
                         ", expected 1");
  }
  gens_ = std::move(generators);

  // Grow the sieve until it shows minGenerator() consecutive members; the run
  // start bounds the conductor from above, then scan back for the last gap.
  std::int64_t bound = 4 * gens_.back() + 4;
  for (;;) {
    std::vector<bool> in = sieveUpTo(gens_, bound);
    std::int64_t run = 0;
    std::int64_t runEnd = -1;
    for (std::int64_t n = 0; n <= bound; ++n) {
      run = in[static_cast<std::size_t>(n)] ? run + 1 : 0;
      if (run >= gens_.front()) {
        runEnd = n;
        break;
      }
    }
    if (runEnd >= 0) {
      std::int64_t c = runEnd - gens_.front() + 1;
      while (c > 0 && in[static_cast<std::size_t>(c - 1)]) --c;
      conductor_ = c;
      sieve_ = std::move(in);
      sieve_.resize(static_cast<std::size_t>(conductor_ + gens_.back()) + 1, true);
      return;
    }
    bound *= 2;
  }
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) throw InputError("membership query with negative exponent " + std::to_string(n));
  if (n >= conductor_) return true;
  return sieve_[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> NumericalSemigroup::monomialsUpTo(std::int64_t bound) const {
  if (bound < 0) throw InputError("monomial bound must be non-negative");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(bound) + 1);
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

}  // namespace fibercone

#ifndef FIBERCONE_SEMIGROUP_HPP
#define FIBERCONE_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

namespace fibercone {

/// A numerical semigroup S = <g_1,...,g_m> with gcd(g_i) = 1: the exponent
/// lattice of the ambient ring k[[t^S]]. Immutable after construction.
class NumericalSemigroup {
public:
  // Generators are deduplicated and sorted; redundant generators are kept.
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::int64_t conductor() const { return conductor_; }
  std::int64_t minGenerator() const { return gens_.front(); }
  std::int64_t maxGenerator() const { return gens_.back(); }

  // True iff n is a non-negative integer combination of the generators.
  bool contains(std::int64_t n) const;

  // All s in S with s <= bound, strictly ascending.
  std::vector<std::int64_t> monomialsUpTo(std::int64_t bound) const;

private:
  std::vector<std::int64_t> gens_;
  std::int64_t conductor_ = 0;
  std::vector<bool> sieve_;  // membership on [0, conductor + maxGenerator]
};

}  // namespace fibercone

#endif

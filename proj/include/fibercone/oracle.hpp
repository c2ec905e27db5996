#ifndef FIBERCONE_ORACLE_HPP
#define FIBERCONE_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fibercone/invariants.hpp"

namespace fibercone {

/// The multiplication-by-a maps between the graded pieces I^n/mI^n, in the
/// echelon-complement bases. Ranks of composites recover the f-table without
/// touching the colon route.
struct GradedMapChain {
  std::int64_t r = 0;
  std::int64_t pad = 0;
  std::vector<std::int64_t> dims;  // mu(I^n), n = 0..r+pad
  std::vector<MatrixXl> maps;      // maps[n]: dims[n+1] x dims[n]
};

// Builds the chain for n = 0..r+pad and checks the dimensions against the mu
// table; for n >= r the maps must be isomorphisms.
GradedMapChain buildChain(const IdealHandle& ideal, const SeriesElement& a,
                          std::int64_t r, const std::vector<std::int64_t>& mu,
                          std::int64_t pad = 2);

std::int64_t rankMod(const MatrixXl& m, std::int64_t p);

// f_{k,l} as the kernel dimension of the l-fold composite out of degree k.
std::int64_t fViaRanks(const GradedMapChain& chain, std::int64_t k, std::int64_t l,
                       std::int64_t p);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
  bool operator==(const CheckItem&) const = default;
};

struct CrossCheckResult {
  bool pass = false;
  std::vector<CheckItem> items;
  bool operator==(const CrossCheckResult&) const = default;
};

// Dual-route verification: rank-route f-table against the colon-route table,
// the Hilbert numerator identity, and the length of F/a^{r+1}F computed from
// graded pieces against its closed form.
CrossCheckResult crossCheck(const GradedMapChain& chain, const IdealHandle& ideal,
                            const SeriesElement& a, std::int64_t r,
                            const std::vector<std::int64_t>& mu, const TriangularTable& f,
                            const std::vector<std::int64_t>& alphaFree,
                            const TriangularTable& alphaTorsion);

}  // namespace fibercone

#endif

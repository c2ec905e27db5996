#ifndef FIBERCONE_INVARIANTS_HPP
#define FIBERCONE_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/ideal.hpp"

namespace fibercone {

/// Triangular table indexed by 1 <= k <= r-1, 1 <= l <= r-k. Used both for
/// the colon lengths f_{k,l} and for the torsion multiplicities alpha_{k,l};
/// reads outside the index range return 0.
struct TriangularTable {
  std::int64_t r = 0;
  std::vector<std::vector<std::int64_t>> cells;

  static TriangularTable zero(std::int64_t r);
  std::int64_t get(std::int64_t k, std::int64_t l) const;
  void set(std::int64_t k, std::int64_t l, std::int64_t value);
  std::int64_t total() const;
  bool empty() const { return r <= 1; }
  bool operator==(const TriangularTable&) const = default;
};

struct ReductionCandidate {
  RawSeries element;
  std::string origin;  // "given" | "generator" | "random"
  std::int64_t reductionNumber = -1;
  bool verified = false;
};

enum class VerifyStatus { Verified, NotReduction, WindowLimited };

struct VerifyResult {
  VerifyStatus status;
  std::int64_t reductionNumber = -1;
};

// Least n <= rBound with I^{n+1} = a I^n. Tests are only trusted while the
// window supports the power involved; past that the result is WindowLimited.
VerifyResult verifyReduction(const IdealHandle& ideal, const SeriesElement& a,
                             std::int64_t rBound, std::int64_t maxTestable);

// Walks the candidate list in order and returns the first verified one.
// Throws NoReductionError when every candidate fails decisively and
// TruncationError when the window ran out before a decision.
ReductionCandidate findReduction(const IdealHandle& ideal,
                                 const std::vector<RawSeries>& candidates,
                                 std::int64_t rBound, std::int64_t maxTestable);

// mu(I^n) for n = 0..r+2; the two padded values must already equal mu(I^r).
std::vector<std::int64_t> muTable(const IdealHandle& ideal, std::int64_t r);

// f_{k,l} = lambda((I^k cap (m I^{k+l} : a^l)) / m I^k).
TriangularTable fTable(const IdealHandle& ideal, const SeriesElement& a, std::int64_t r);

// Inversion of f into the torsion multiplicities, validated by exact
// re-substitution; any negative entry is an internal inconsistency.
TriangularTable alphaTorsion(const TriangularTable& f);

// Free multiplicities alpha_0..alpha_r from the mu and f tables.
std::vector<std::int64_t> alphaFree(const std::vector<std::int64_t>& mu,
                                    const TriangularTable& f, std::int64_t r);

// Lifts of the graded pieces of the torsion submodule:
// T_k = I^k cap (m I^r : a^{r-k}), k = 1..r-1, checked against f_{k,r-k}.
std::vector<Subspace> torsionPieces(const IdealHandle& ideal, const SeriesElement& a,
                                    std::int64_t r, const TriangularTable& f);

struct Decomposition {
  std::vector<std::int64_t> freeMultiplicity;  // alpha_i at shift i
  TriangularTable torsionMultiplicity;         // alpha_{i,j} at (shift i, power j)
  std::string format() const;
  bool operator==(const Decomposition&) const = default;
};

struct Classification {
  bool cohenMacaulay = false;
  bool buchsbaum = false;
  bool gorenstein = false;
  std::int64_t multiplicity = 0;       // e = mu(I^r)
  std::int64_t regularity = 0;         // = r
  std::int64_t postulationNumber = 0;  // fp; -1 when mu is constant
  std::int64_t torsionLength = 0;
  std::int64_t buchsbaumConstant = 0;  // sum of f_{k,1}
  std::optional<std::int64_t> type;    // present iff Cohen-Macaulay
  std::optional<std::int64_t> aInvariant;
  // Multiplicity of the canonical-module summand with twist i-1, i = 0..r.
  std::optional<std::vector<std::int64_t>> canonicalShape;
  bool operator==(const Classification&) const = default;
};

Classification classify(const IdealHandle& ideal, const SeriesElement& a, std::int64_t r,
                        const std::vector<std::int64_t>& mu, const TriangularTable& f,
                        const std::vector<Subspace>& torsion);

// Numerator of the Hilbert series from the mu route (coefficients 0..r).
std::vector<std::int64_t> hilbertNumerator(const std::vector<std::int64_t>& mu,
                                           std::int64_t r);

// The same numerator from the decomposition route.
std::vector<std::int64_t> hilbertFromAlphas(const std::vector<std::int64_t>& alphaFree,
                                            const TriangularTable& alphaTorsion);

// Asserts the two routes agree and Q(1) = e; returns the numerator.
std::vector<std::int64_t> hilbertData(const std::vector<std::int64_t>& mu, std::int64_t r,
                                      const std::vector<std::int64_t>& alphaFree,
                                      const TriangularTable& alphaTorsion);

}  // namespace fibercone

#endif

#include "fibercone/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "fibercone/errors.hpp"

namespace fibercone {

/////////////////////
// TriangularTable //
/////////////////////

TriangularTable TriangularTable::zero(std::int64_t r) {
  TriangularTable t;
  t.r = r;
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    t.cells.emplace_back(static_cast<std::size_t>(r - k), 0);
  }
  return t;
}

std::int64_t TriangularTable::get(std::int64_t k, std::int64_t l) const {
  if (k < 1 || k > r - 1 || l < 1 || l > r - k) return 0;
  return cells[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
}

void TriangularTable::set(std::int64_t k, std::int64_t l, std::int64_t value) {
  cells[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] = value;
}

std::int64_t TriangularTable::total() const {
  std::int64_t s = 0;
  for (const auto& row : cells) s += std::accumulate(row.begin(), row.end(), std::int64_t{0});
  return s;
}

///////////////////////
// Reduction search  //
///////////////////////

VerifyResult verifyReduction(const IdealHandle& ideal, const SeriesElement& a,
                             std::int64_t rBound, std::int64_t maxTestable) {
  if (a.isZero()) return {VerifyStatus::NotReduction, -1};
  for (std::int64_t n = 0; n <= std::min(rBound, maxTestable); ++n) {
    if (ideal.power(n + 1) == multiplyByElement(ideal.power(n), a)) {
      return {VerifyStatus::Verified, n};
    }
  }
  if (rBound <= maxTestable) return {VerifyStatus::NotReduction, -1};
  return {VerifyStatus::WindowLimited, -1};
}

ReductionCandidate findReduction(const IdealHandle& ideal,
                                 const std::vector<RawSeries>& candidates,
                                 std::int64_t rBound, std::int64_t maxTestable) {
  bool windowLimited = false;
  for (const RawSeries& raw : candidates) {
    SeriesElement a = SeriesElement::fromRaw(ideal.context(), raw);
    if (a.isZero()) continue;
    // Only minimal-valuation elements can generate a reduction here.
    if (a.valuation().value() != ideal.valuation()) continue;
    VerifyResult res = verifyReduction(ideal, a, rBound, maxTestable);
    if (res.status == VerifyStatus::Verified) {
      return ReductionCandidate{raw, "", res.reductionNumber, true};
    }
    if (res.status == VerifyStatus::WindowLimited) windowLimited = true;
  }
  if (windowLimited) {
    throw TruncationError("reduction search exhausted the working window; increase truncation");
  }
  throw NoReductionError("no principal reduction found within reduction-number bound " +
                         std::to_string(rBound));
}

////////////
// Tables //
////////////

std::vector<std::int64_t> muTable(const IdealHandle& ideal, std::int64_t r) {
  std::vector<std::int64_t> mu;
  mu.reserve(static_cast<std::size_t>(r) + 3);
  for (std::int64_t n = 0; n <= r + 2; ++n) {
    mu.push_back(quotientLength(ideal.power(n), ideal.mTimesPower(n)));
  }
  if (mu[static_cast<std::size_t>(r + 1)] != mu[static_cast<std::size_t>(r)] ||
      mu[static_cast<std::size_t>(r + 2)] != mu[static_cast<std::size_t>(r)]) {
    throw InternalError("mu(I^n) failed to stabilize at mu(I^r) past the reduction number");
  }
  return mu;
}

TriangularTable fTable(const IdealHandle& ideal, const SeriesElement& a, std::int64_t r) {
  TriangularTable f = TriangularTable::zero(r);
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    for (std::int64_t l = 1; l <= r - k; ++l) {
      Subspace colon = colonByElement(ideal.mTimesPower(k + l), a, l);
      Subspace u = intersect(ideal.power(k), colon);
      f.set(k, l, quotientLength(u, ideal.mTimesPower(k)));
    }
    for (std::int64_t l = 2; l <= r - k; ++l) {
      if (f.get(k, l) < f.get(k, l - 1)) {
        throw InternalError("f-table not monotone in l at k=" + std::to_string(k));
      }
    }
  }
  return f;
}

TriangularTable alphaTorsion(const TriangularTable& f) {
  const std::int64_t r = f.r;
  TriangularTable alpha = TriangularTable::zero(r);
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    for (std::int64_t l = 1; l <= r - k; ++l) {
      const std::int64_t value = (f.get(k, l) - f.get(k, l - 1)) -
                                 (f.get(k - 1, l + 1) - f.get(k - 1, l));
      if (value < 0) {
        throw InternalError("negative torsion multiplicity alpha_{" + std::to_string(k) +
                            "," + std::to_string(l) + "}");
      }
      alpha.set(k, l, value);
    }
  }
  // Exact round-trip through the defining sum.
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    for (std::int64_t l = 1; l <= r - k; ++l) {
      std::int64_t s = 0;
      for (std::int64_t i = 1; i <= k; ++i) {
        for (std::int64_t j = k - i + 1; j <= k - i + l; ++j) s += alpha.get(i, j);
      }
      if (s != f.get(k, l)) {
        throw InternalError("torsion multiplicities do not reproduce the f-table");
      }
    }
  }
  return alpha;
}

std::vector<std::int64_t> alphaFree(const std::vector<std::int64_t>& mu,
                                    const TriangularTable& f, std::int64_t r) {
  std::vector<std::int64_t> alpha(static_cast<std::size_t>(r) + 1, 0);
  alpha[0] = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    alpha[static_cast<std::size_t>(i)] =
        mu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i - 1)] -
        (f.get(i, r - i) - f.get(i - 1, r - i + 1));
    if (alpha[static_cast<std::size_t>(i)] < 0) {
      throw InternalError("negative free multiplicity alpha_" + std::to_string(i));
    }
  }
  if (r >= 1 && alpha[static_cast<std::size_t>(r)] == 0) {
    throw InternalError("top free multiplicity alpha_r vanished");
  }
  const std::int64_t total = std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
  if (total != mu[static_cast<std::size_t>(r)]) {
    throw InternalError("free multiplicities do not sum to mu(I^r)");
  }
  return alpha;
}

std::vector<Subspace> torsionPieces(const IdealHandle& ideal, const SeriesElement& a,
                                    std::int64_t r, const TriangularTable& f) {
  std::vector<Subspace> pieces;
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    Subspace colon = colonByElement(ideal.mTimesPower(r), a, r - k);
    Subspace piece = intersect(ideal.power(k), colon);
    if (quotientLength(piece, ideal.mTimesPower(k)) != f.get(k, r - k)) {
      throw InternalError("torsion piece dimension disagrees with f_{k,r-k} at k=" +
                          std::to_string(k));
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

///////////////////
// Decomposition //
///////////////////

namespace {

std::string withMultiplicity(const std::string& base, std::int64_t mult) {
  if (mult == 1) return base;
  return "(" + base + ")^" + std::to_string(mult);
}

}  // namespace

std::string Decomposition::format() const {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " ⊕ ";
    out += piece;
  };
  for (std::size_t i = 0; i < freeMultiplicity.size(); ++i) {
    if (freeMultiplicity[i] == 0) continue;
    std::string base = i == 0 ? "F(J)" : "F(J)(-" + std::to_string(i) + ")";
    append(withMultiplicity(base, freeMultiplicity[i]));
  }
  const TriangularTable& t = torsionMultiplicity;
  for (std::int64_t i = 1; i <= t.r - 1; ++i) {
    for (std::int64_t j = 1; j <= t.r - i; ++j) {
      if (t.get(i, j) == 0) continue;
      std::string quot = j == 1 ? "F(J)/aF(J)" : "F(J)/a^" + std::to_string(j) + "F(J)";
      append(withMultiplicity("(" + quot + ")(-" + std::to_string(i) + ")", t.get(i, j)));
    }
  }
  return out;
}

////////////////////
// Classification //
////////////////////

namespace {

// Remark-style Buchsbaum test: every degree-one class kills the torsion,
// i.e. g * T_k lies in m I^{k+1} for every ideal generator g.
bool torsionKilledByDegreeOne(const IdealHandle& ideal, std::int64_t r,
                              const std::vector<Subspace>& torsion) {
  const ContextPtr& ctx = ideal.context();
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    const Subspace& piece = torsion[static_cast<std::size_t>(k - 1)];
    const Subspace& mk = ideal.mTimesPower(k);
    const Subspace& target = ideal.mTimesPower(k + 1);
    for (Eigen::Index i = 0; i < piece.rows().rows(); ++i) {
      // Rows below m I^k multiply into m I^{k+1} automatically.
      const Eigen::Index pv = piece.pivots()[static_cast<std::size_t>(i)];
      bool inLower = false;
      for (Eigen::Index q : mk.pivots()) {
        if (q == pv) {
          inLower = true;
          break;
        }
      }
      if (inLower) continue;
      for (const SeriesElement& g : ideal.generators()) {
        if (!target.containsVector(multiplyRowByElement(ctx, piece.rows().row(i), g))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::int64_t typeLength(const IdealHandle& ideal, const SeriesElement& a, std::int64_t r) {
  if (r == 0) return 1;  // F(I) = F(J), a polynomial ring
  std::int64_t type = 0;
  for (std::int64_t i = 1; i <= r - 1; ++i) {
    Subspace top = sum(multiplyByElement(ideal.power(i), a), ideal.mTimesPower(i + 1));
    Subspace colon = colonByIdeal(top, ideal.generators());
    Subspace u = intersect(ideal.power(i), colon);
    Subspace v = sum(multiplyByElement(ideal.power(i - 1), a), ideal.mTimesPower(i));
    type += quotientLength(u, v);
  }
  Subspace v = sum(multiplyByElement(ideal.power(r - 1), a), ideal.mTimesPower(r));
  type += quotientLength(ideal.power(r), v);
  return type;
}

}  // namespace

Classification classify(const IdealHandle& ideal, const SeriesElement& a, std::int64_t r,
                        const std::vector<std::int64_t>& mu, const TriangularTable& f,
                        const std::vector<Subspace>& torsion) {
  Classification c;
  c.multiplicity = mu[static_cast<std::size_t>(r)];
  c.regularity = r;
  c.postulationNumber = -1;
  for (std::int64_t n = r; n >= 0; --n) {
    if (mu[static_cast<std::size_t>(n)] != c.multiplicity) {
      c.postulationNumber = n;
      break;
    }
  }
  for (std::int64_t k = 1; k <= r - 1; ++k) {
    c.torsionLength += f.get(k, r - k);
    c.buchsbaumConstant += f.get(k, 1);
  }
  c.cohenMacaulay = c.torsionLength == 0;
  c.buchsbaum = c.cohenMacaulay || torsionKilledByDegreeOne(ideal, r, torsion);
  if (c.cohenMacaulay && !c.buchsbaum) {
    throw InternalError("Cohen-Macaulay instance failed the Buchsbaum test");
  }
  if (c.cohenMacaulay) {
    c.type = typeLength(ideal, a, r);
    c.gorenstein = *c.type == 1;
    c.aInvariant = r - 1;
    std::vector<std::int64_t> shape;
    for (std::int64_t i = 0; i <= r; ++i) {
      shape.push_back(mu[static_cast<std::size_t>(i)] -
                      (i > 0 ? mu[static_cast<std::size_t>(i - 1)] : 0));
    }
    c.canonicalShape = std::move(shape);
    if (c.gorenstein) {
      for (std::int64_t i = 0; i <= r; ++i) {
        const std::int64_t lhs = mu[static_cast<std::size_t>(i)] -
                                 (i > 0 ? mu[static_cast<std::size_t>(i - 1)] : 0);
        const std::int64_t rhs =
            (r - i >= 0 ? mu[static_cast<std::size_t>(r - i)] : 0) -
            (r - i - 1 >= 0 ? mu[static_cast<std::size_t>(r - i - 1)] : 0);
        if (lhs != rhs) {
          throw InternalError("Gorenstein instance with non-symmetric h-vector");
        }
      }
    }
  }
  return c;
}

//////////////////
// Hilbert data //
//////////////////

std::vector<std::int64_t> hilbertNumerator(const std::vector<std::int64_t>& mu,
                                           std::int64_t r) {
  std::vector<std::int64_t> q(static_cast<std::size_t>(r) + 1, 0);
  for (std::int64_t n = 0; n <= r; ++n) {
    q[static_cast<std::size_t>(n)] = mu[static_cast<std::size_t>(n)] -
                                     (n > 0 ? mu[static_cast<std::size_t>(n - 1)] : 0);
  }
  return q;
}

std::vector<std::int64_t> hilbertFromAlphas(const std::vector<std::int64_t>& alphaFree,
                                            const TriangularTable& alphaTorsion) {
  std::vector<std::int64_t> q(alphaFree.size(), 0);
  for (std::size_t i = 0; i < alphaFree.size(); ++i) q[i] += alphaFree[i];
  for (std::int64_t i = 1; i <= alphaTorsion.r - 1; ++i) {
    for (std::int64_t j = 1; j <= alphaTorsion.r - i; ++j) {
      const std::int64_t m = alphaTorsion.get(i, j);
      q[static_cast<std::size_t>(i)] += m;
      q[static_cast<std::size_t>(i + j)] -= m;
    }
  }
  return q;
}

std::vector<std::int64_t> hilbertData(const std::vector<std::int64_t>& mu, std::int64_t r,
                                      const std::vector<std::int64_t>& alphaFree,
                                      const TriangularTable& alphaTorsion) {
  std::vector<std::int64_t> q = hilbertNumerator(mu, r);
  if (q != hilbertFromAlphas(alphaFree, alphaTorsion)) {
    throw InternalError("Hilbert numerator disagrees between the mu and alpha routes");
  }
  const std::int64_t atOne = std::accumulate(q.begin(), q.end(), std::int64_t{0});
  if (atOne != mu[static_cast<std::size_t>(r)]) {
    throw InternalError("Hilbert numerator at 1 differs from the multiplicity");
  }
  return q;
}

}  // namespace fibercone

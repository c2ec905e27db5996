#include "fibercone/oracle.hpp"

#include <numeric>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

// Rows of I^n whose pivots are not pivots of m I^n: echelon-complement
// representatives of a basis of I^n/mI^n, in ascending pivot order.
std::vector<Eigen::Index> cosetRepRows(const Subspace& power, const Subspace& mPower) {
  std::vector<Eigen::Index> reps;
  for (Eigen::Index i = 0; i < power.rows().rows(); ++i) {
    const Eigen::Index pv = power.pivots()[static_cast<std::size_t>(i)];
    if (mPower.rowIndexForPivot(pv) < 0) reps.push_back(i);
  }
  return reps;
}

// Coordinates of z in the basis {reps of I^n/mI^n} modulo m I^n.
RowVectorXl quotientCoordinates(const ContextPtr& ctx, RowVectorXl z,
                                const Subspace& power, const Subspace& mPower,
                                const std::vector<Eigen::Index>& reps) {
  const std::int64_t p = ctx->characteristic;
  const Eigen::Index n = ctx->dimension();
  std::vector<std::int32_t> repSlot(static_cast<std::size_t>(n), -1);
  for (std::size_t s = 0; s < reps.size(); ++s) {
    const Eigen::Index pv = power.pivots()[static_cast<std::size_t>(reps[s])];
    repSlot[static_cast<std::size_t>(pv)] = static_cast<std::int32_t>(s);
  }
  RowVectorXl coords = RowVectorXl::Zero(static_cast<Eigen::Index>(reps.size()));
  for (Eigen::Index pos = 0; pos < n; ++pos) {
    if (z[pos] == 0) continue;
    const std::int64_t c = z[pos];
    const std::int32_t mрow = mPower.rowIndexForPivot(pos);
    if (mрow >= 0) {
      if (mPower.isUnitRow(static_cast<std::size_t>(mрow))) {
        z[pos] = 0;
      } else {
        const Eigen::Index len = n - pos;
        z.segment(pos, len) += (p - c) * mPower.rows().row(mрow).segment(pos, len);
        for (Eigen::Index j = pos; j < n; ++j) {
          if (z[j] >= p) z[j] %= p;
        }
      }
      continue;
    }
    const std::int32_t slot = repSlot[static_cast<std::size_t>(pos)];
    if (slot < 0) {
      throw InternalError("graded image leaves I^{n+1}: oracle basis inconsistency");
    }
    coords[slot] = c;
    const Eigen::Index repRow = reps[static_cast<std::size_t>(slot)];
    if (power.isUnitRow(static_cast<std::size_t>(repRow))) {
      z[pos] = 0;
    } else {
      const Eigen::Index len = n - pos;
      z.segment(pos, len) += (p - c) * power.rows().row(repRow).segment(pos, len);
      for (Eigen::Index j = pos; j < n; ++j) {
        if (z[j] >= p) z[j] %= p;
      }
    }
  }
  return coords;
}

}  // namespace

GradedMapChain buildChain(const IdealHandle& ideal, const SeriesElement& a,
                          std::int64_t r, const std::vector<std::int64_t>& mu,
                          std::int64_t pad) {
  const ContextPtr& ctx = ideal.context();
  GradedMapChain chain;
  chain.r = r;
  chain.pad = pad;

  std::vector<std::vector<Eigen::Index>> reps;
  for (std::int64_t n = 0; n <= r + pad; ++n) {
    reps.push_back(cosetRepRows(ideal.power(n), ideal.mTimesPower(n)));
    chain.dims.push_back(static_cast<std::int64_t>(reps.back().size()));
    if (chain.dims.back() != mu[static_cast<std::size_t>(n)]) {
      throw InternalError("graded basis dimension disagrees with mu(I^" +
                          std::to_string(n) + ")");
    }
  }
  for (std::int64_t n = 0; n < r + pad; ++n) {
    const Subspace& source = ideal.power(n);
    const Subspace& target = ideal.power(n + 1);
    const Subspace& mTarget = ideal.mTimesPower(n + 1);
    const auto& sourceReps = reps[static_cast<std::size_t>(n)];
    const auto& targetReps = reps[static_cast<std::size_t>(n + 1)];
    MatrixXl m(static_cast<Eigen::Index>(targetReps.size()),
               static_cast<Eigen::Index>(sourceReps.size()));
    for (std::size_t j = 0; j < sourceReps.size(); ++j) {
      RowVectorXl image =
          multiplyRowByElement(ctx, source.rows().row(sourceReps[j]), a);
      RowVectorXl coords = quotientCoordinates(ctx, std::move(image), target, mTarget,
                                               targetReps);
      m.col(static_cast<Eigen::Index>(j)) = coords.transpose();
    }
    if (n >= r) {
      if (m.rows() != m.cols() || rankMod(m, ctx->characteristic) != m.rows()) {
        throw InternalError("multiplication map is not an isomorphism past degree r");
      }
    }
    chain.maps.push_back(std::move(m));
  }
  return chain;
}

std::int64_t rankMod(const MatrixXl& m, std::int64_t p) {
  RowEchelon elim(m.cols(), p);
  for (Eigen::Index i = 0; i < m.rows(); ++i) elim.insert(m.row(i));
  return elim.rank();
}

std::int64_t fViaRanks(const GradedMapChain& chain, std::int64_t k, std::int64_t l,
                       std::int64_t p) {
  if (k < 1 || k > chain.r - 1 || l < 1 || l > chain.r - k) {
    throw InternalError("fViaRanks index out of range");
  }
  MatrixXl composite = chain.maps[static_cast<std::size_t>(k)];
  for (std::int64_t s = k + 1; s < k + l; ++s) {
    composite = chain.maps[static_cast<std::size_t>(s)] * composite;
    composite = composite.unaryExpr([p](std::int64_t v) { return v % p; });
  }
  return chain.dims[static_cast<std::size_t>(k)] - rankMod(composite, p);
}

CrossCheckResult crossCheck(const GradedMapChain& chain, const IdealHandle& ideal,
                            const SeriesElement& a, std::int64_t r,
                            const std::vector<std::int64_t>& mu, const TriangularTable& f,
                            const std::vector<std::int64_t>& alphaFree,
                            const TriangularTable& alphaTorsion) {
  const std::int64_t p = ideal.context()->characteristic;
  CrossCheckResult res;

  {
    CheckItem item{"f_rank_vs_colon", true, ""};
    for (std::int64_t k = 1; k <= r - 1; ++k) {
      for (std::int64_t l = 1; l <= r - k; ++l) {
        const std::int64_t viaRanks = fViaRanks(chain, k, l, p);
        if (viaRanks != f.get(k, l)) {
          item.pass = false;
          if (!item.detail.empty()) item.detail += "; ";
          item.detail += "(" + std::to_string(k) + "," + std::to_string(l) +
                         "): rank-route=" + std::to_string(viaRanks) +
                         ", colon-route=" + std::to_string(f.get(k, l));
        }
      }
    }
    res.items.push_back(std::move(item));
  }

  {
    CheckItem item{"hilbert_identity", true, ""};
    const std::vector<std::int64_t> qMu = hilbertNumerator(mu, r);
    const std::vector<std::int64_t> qAlpha = hilbertFromAlphas(alphaFree, alphaTorsion);
    const std::int64_t atOne = std::accumulate(qMu.begin(), qMu.end(), std::int64_t{0});
    if (qMu != qAlpha) {
      item.pass = false;
      item.detail = "mu route and alpha route disagree";
    } else if (atOne != mu[static_cast<std::size_t>(r)]) {
      item.pass = false;
      item.detail = "Q(1) != e";
    }
    res.items.push_back(std::move(item));
  }

  {
    // lambda(F/a^{r+1}F) from graded pieces against mu(I^r)(r+1) + lambda(T).
    CheckItem item{"length_mod_a_power", true, ""};
    const SeriesElement aPow = a.power(r + 1);
    std::int64_t direct = 0;
    for (std::int64_t n = 0; n <= r; ++n) direct += mu[static_cast<std::size_t>(n)];
    for (std::int64_t n = r + 1; n <= 2 * r + 1; ++n) {
      Subspace denominator = sum(ideal.mTimesPower(n),
                                 multiplyByElement(ideal.power(n - r - 1), aPow));
      const std::int64_t piece = quotientLength(ideal.power(n), denominator);
      if (n == 2 * r + 1 && piece != 0) {
        item.pass = false;
        item.detail = "graded piece past degree 2r did not vanish";
      }
      direct += piece;
    }
    std::int64_t torsionLength = 0;
    for (std::int64_t k = 1; k <= r - 1; ++k) torsionLength += f.get(k, r - k);
    const std::int64_t closed = mu[static_cast<std::size_t>(r)] * (r + 1) + torsionLength;
    if (direct != closed) {
      item.pass = false;
      if (!item.detail.empty()) item.detail += "; ";
      item.detail += "direct=" + std::to_string(direct) + ", closed=" +
                     std::to_string(closed);
    }
    res.items.push_back(std::move(item));
  }

  res.pass = true;
  for (const CheckItem& item : res.items) res.pass = res.pass && item.pass;
  return res;
}

}  // namespace fibercone

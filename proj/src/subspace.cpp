#include "fibercone/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

void requireSameContext(const ContextPtr& a, const ContextPtr& b) {
  if (a != b) throw InternalError("subspace operands belong to different ring contexts");
}

Eigen::Index countNonzeros(const RowVectorXl& row) {
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (row[j] != 0) ++k;
  }
  return k;
}

}  // namespace

////////////////
// RowEchelon //
////////////////

RowEchelon::RowEchelon(Eigen::Index cols, std::int64_t p) : p_(p), cols_(cols) {
  rowAtPivot_.assign(static_cast<std::size_t>(cols), -1);
}

bool RowEchelon::insert(RowVectorXl row) {
  const std::int64_t p = p_;
  for (Eigen::Index j = 0; j < cols_; ++j) {
    if (row[j] < 0 || row[j] >= p) row[j] = gfp::normalize(row[j], p);
  }
  Eigen::Index pos = 0;
  for (;;) {
    while (pos < cols_ && row[pos] == 0) ++pos;
    if (pos == cols_) return false;
    std::int32_t r = rowAtPivot_[static_cast<std::size_t>(pos)];
    if (r < 0) {
      if (row[pos] != 1) {
        std::int64_t inv = gfp::inverse(row[pos], p);
        for (Eigen::Index j = pos; j < cols_; ++j) {
          if (row[j] != 0) row[j] = (row[j] * inv) % p;
        }
      }
      unit_.push_back(countNonzeros(row) == 1 ? 1 : 0);
      pivotOfRow_.push_back(pos);
      rowAtPivot_[static_cast<std::size_t>(pos)] =
          static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const std::int64_t c = row[pos];
    if (unit_[static_cast<std::size_t>(r)]) {
      row[pos] = 0;
    } else {
      const RowVectorXl& pr = rows_[static_cast<std::size_t>(r)];
      const std::int64_t mc = p - c;
      const Eigen::Index len = cols_ - pos;
      row.segment(pos, len) += mc * pr.segment(pos, len);
      for (Eigen::Index j = pos; j < cols_; ++j) {
        if (row[j] >= p) row[j] %= p;
      }
    }
    ++pos;
  }
}

RowEchelon::Result RowEchelon::finalize() {
  const std::int64_t p = p_;
  const std::size_t k = rows_.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivotOfRow_[a] < pivotOfRow_[b]; });

  // Back-substitute from the highest pivot down.
  for (std::size_t oi = k; oi-- > 0;) {
    const std::size_t i = order[oi];
    const Eigen::Index pv = pivotOfRow_[i];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const std::size_t j = order[oj];
      RowVectorXl& rj = rows_[j];
      const std::int64_t c = rj[pv];
      if (c == 0) continue;
      if (unit_[i]) {
        rj[pv] = 0;
      } else {
        const RowVectorXl& ri = rows_[i];
        const std::int64_t mc = p - c;
        const Eigen::Index len = cols_ - pv;
        rj.segment(pv, len) += mc * ri.segment(pv, len);
        for (Eigen::Index col = pv; col < cols_; ++col) {
          if (rj[col] >= p) rj[col] %= p;
        }
      }
    }
  }

  Result res;
  res.rows.resize(static_cast<Eigen::Index>(k), cols_);
  res.pivots.reserve(k);
  for (std::size_t oi = 0; oi < k; ++oi) {
    res.rows.row(static_cast<Eigen::Index>(oi)) = rows_[order[oi]];
    res.pivots.push_back(pivotOfRow_[order[oi]]);
  }
  rows_.clear();
  pivotOfRow_.clear();
  unit_.clear();
  rowAtPivot_.assign(static_cast<std::size_t>(cols_), -1);
  return res;
}

//////////////
// Subspace //
//////////////

Subspace::Subspace(ContextPtr ctx, MatrixXl rows, std::vector<Eigen::Index> pivots)
    : ctx_(std::move(ctx)), rows_(std::move(rows)), pivots_(std::move(pivots)) {
  rowAtPivot_.assign(static_cast<std::size_t>(ctx_->dimension()), -1);
  unit_.resize(static_cast<std::size_t>(rows_.rows()));
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    rowAtPivot_[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])] =
        static_cast<std::int32_t>(i);
    unit_[static_cast<std::size_t>(i)] = countNonzeros(rows_.row(i)) == 1 ? 1 : 0;
  }
}

Subspace Subspace::zero(ContextPtr ctx) {
  const Eigen::Index n = ctx->dimension();
  return Subspace(std::move(ctx), MatrixXl(0, n), {});
}

Subspace Subspace::full(ContextPtr ctx) {
  const Eigen::Index n = ctx->dimension();
  MatrixXl id = MatrixXl::Identity(n, n);
  std::vector<Eigen::Index> pivots(static_cast<std::size_t>(n));
  std::iota(pivots.begin(), pivots.end(), 0);
  return Subspace(std::move(ctx), std::move(id), std::move(pivots));
}

Subspace Subspace::fromRowSpan(ContextPtr ctx, const std::vector<RowVectorXl>& rows) {
  RowEchelon elim(ctx->dimension(), ctx->characteristic);
  for (const RowVectorXl& r : rows) elim.insert(r);
  return fromEchelon(std::move(ctx), elim.finalize());
}

Subspace Subspace::fromEchelon(ContextPtr ctx, RowEchelon::Result echelon) {
  return Subspace(std::move(ctx), std::move(echelon.rows), std::move(echelon.pivots));
}

std::vector<std::int64_t> Subspace::pivotExponents() const {
  std::vector<std::int64_t> out;
  out.reserve(pivots_.size());
  for (Eigen::Index p : pivots_) out.push_back(ctx_->exponents[static_cast<std::size_t>(p)]);
  return out;
}

void Subspace::reduceInPlace(RowVectorXl& v) const {
  const std::int64_t p = ctx_->characteristic;
  const Eigen::Index n = ctx_->dimension();
  for (Eigen::Index pos = 0; pos < n; ++pos) {
    if (v[pos] == 0) continue;
    const std::int32_t r = rowAtPivot_[static_cast<std::size_t>(pos)];
    if (r < 0) continue;
    if (unit_[static_cast<std::size_t>(r)]) {
      v[pos] = 0;
      continue;
    }
    const std::int64_t mc = p - v[pos];
    const Eigen::Index len = n - pos;
    v.segment(pos, len) += mc * rows_.row(r).segment(pos, len);
    for (Eigen::Index j = pos; j < n; ++j) {
      if (v[j] >= p) v[j] %= p;
    }
  }
}

bool Subspace::containsVector(RowVectorXl v) const {
  reduceInPlace(v);
  return v.isZero();
}

bool Subspace::contains(const Subspace& other) const {
  requireSameContext(ctx_, other.ctx_);
  if (other.dim() > dim()) return false;
  // Pivot columns of a subspace are pivot columns of any superspace.
  for (Eigen::Index p : other.pivots_) {
    if (rowAtPivot_[static_cast<std::size_t>(p)] < 0) return false;
  }
  for (Eigen::Index i = 0; i < other.rows_.rows(); ++i) {
    if (!containsVector(other.rows_.row(i))) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  requireSameContext(ctx_, other.ctx_);
  return pivots_ == other.pivots_ && rows_ == other.rows_;
}

/////////////////////////
// Coordinate bridges  //
/////////////////////////

RowVectorXl toCoordinates(const SeriesElement& x) {
  const RingContext& ctx = *x.context();
  RowVectorXl v = RowVectorXl::Zero(ctx.dimension());
  for (const auto& [e, c] : x.terms()) v[ctx.indexOf(e)] = c;
  return v;
}

RowVectorXl multiplyRowByElement(const ContextPtr& ctx, const RowVectorXl& row,
                                 const SeriesElement& a) {
  const RingContext& rc = *ctx;
  const std::int64_t p = rc.characteristic;
  const std::int64_t w = rc.workingDegree;
  RowVectorXl out = RowVectorXl::Zero(rc.dimension());
  for (const auto& [d, c] : a.terms()) {
    for (Eigen::Index i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      const std::int64_t e = rc.exponents[static_cast<std::size_t>(i)] + d;
      if (e > w) break;  // exponents ascending
      const std::int32_t idx = rc.indexOf(e);
      out[idx] = (out[idx] + c * row[i]) % p;
    }
  }
  return out;
}

/////////////////////////
// Lattice operations  //
/////////////////////////

Subspace sum(const Subspace& u, const Subspace& v) {
  requireSameContext(u.context(), v.context());
  RowEchelon elim(u.context()->dimension(), u.context()->characteristic);
  for (Eigen::Index i = 0; i < u.rows().rows(); ++i) elim.insert(u.rows().row(i));
  for (Eigen::Index i = 0; i < v.rows().rows(); ++i) elim.insert(v.rows().row(i));
  return Subspace::fromEchelon(u.context(), elim.finalize());
}

namespace {

// Shared tail of the Zassenhaus-style computations: run the eliminator over
// [left | right] rows and return the subspace spanned by the right halves of
// the rows whose left half vanished.
Subspace rightHalvesWithZeroLeft(const ContextPtr& ctx, RowEchelon& elim) {
  const Eigen::Index n = ctx->dimension();
  RowEchelon::Result res = elim.finalize();
  std::vector<RowVectorXl> kernel;
  for (std::size_t i = 0; i < res.pivots.size(); ++i) {
    if (res.pivots[i] >= n) {
      kernel.push_back(res.rows.row(static_cast<Eigen::Index>(i)).segment(n, n));
    }
  }
  return Subspace::fromRowSpan(ctx, kernel);
}

}  // namespace

Subspace intersect(const Subspace& u, const Subspace& v) {
  requireSameContext(u.context(), v.context());
  const ContextPtr& ctx = u.context();
  const Eigen::Index n = ctx->dimension();
  RowEchelon elim(2 * n, ctx->characteristic);
  RowVectorXl stacked(2 * n);
  for (Eigen::Index i = 0; i < u.rows().rows(); ++i) {
    stacked.segment(0, n) = u.rows().row(i);
    stacked.segment(n, n) = u.rows().row(i);
    elim.insert(stacked);
  }
  for (Eigen::Index i = 0; i < v.rows().rows(); ++i) {
    stacked.segment(0, n) = v.rows().row(i);
    stacked.segment(n, n).setZero();
    elim.insert(stacked);
  }
  return rightHalvesWithZeroLeft(ctx, elim);
}

std::int64_t quotientLength(const Subspace& u, const Subspace& v) {
  if (!u.contains(v)) {
    throw InternalError("quotient length of non-nested subspaces");
  }
  return static_cast<std::int64_t>(u.dim() - v.dim());
}

Subspace multiplyByElement(const Subspace& u, const SeriesElement& a) {
  requireSameContext(u.context(), a.context());
  std::vector<RowVectorXl> rows;
  rows.reserve(static_cast<std::size_t>(u.dim()));
  for (Eigen::Index i = 0; i < u.rows().rows(); ++i) {
    rows.push_back(multiplyRowByElement(u.context(), u.rows().row(i), a));
  }
  return Subspace::fromRowSpan(u.context(), rows);
}

Subspace colonByElement(const Subspace& m, const SeriesElement& a, std::int64_t l) {
  requireSameContext(m.context(), a.context());
  if (a.isZero()) throw InternalError("colon by the zero element");
  if (l < 1) throw InternalError("colon exponent must be at least 1");
  const ContextPtr& ctx = m.context();
  const Eigen::Index n = ctx->dimension();
  const SeriesElement u = a.power(l);

  RowEchelon elim(2 * n, ctx->characteristic);
  RowVectorXl unitRow = RowVectorXl::Zero(n);
  RowVectorXl stacked(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    unitRow[i] = 1;
    RowVectorXl image = multiplyRowByElement(ctx, unitRow, u);
    unitRow[i] = 0;
    m.reduceInPlace(image);
    stacked.segment(0, n) = image;
    stacked.segment(n, n).setZero();
    stacked[n + i] = 1;
    elim.insert(stacked);
  }
  return rightHalvesWithZeroLeft(ctx, elim);
}

Subspace colonByIdeal(const Subspace& m, const std::vector<SeriesElement>& generators) {
  bool any = false;
  Subspace acc = Subspace::zero(m.context());
  for (const SeriesElement& g : generators) {
    if (g.isZero()) continue;
    Subspace piece = colonByElement(m, g, 1);
    acc = any ? intersect(acc, piece) : std::move(piece);
    any = true;
  }
  if (!any) throw InternalError("colon by an ideal with no nonzero generators");
  return acc;
}

}  // namespace fibercone

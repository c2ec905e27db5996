#ifndef FIBERCONE_SUBSPACE_HPP
#define FIBERCONE_SUBSPACE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "fibercone/ring.hpp"

namespace fibercone {

// Dense exact types over GF(p); row-major so row operations are contiguous.
using MatrixXl =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVectorXl = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;

/// Incremental Gaussian eliminator over GF(p). Rows are inserted one at a
/// time and reduced against the current pivots; finalize() back-substitutes
/// into the canonical reduced row echelon form. Rows consisting of a single
/// nonzero entry are tracked so that reductions against them cost O(1).
class RowEchelon {
public:
  RowEchelon(Eigen::Index cols, std::int64_t p);

  // Reduces `row` against the current pivots; keeps it if independent.
  // Returns true when the rank grew. `row` entries may be unnormalized.
  bool insert(RowVectorXl row);

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  // Canonical RREF: rows sorted by pivot, pivots 1, pivot columns cleared.
  // Leaves the eliminator empty.
  struct Result {
    MatrixXl rows;
    std::vector<Eigen::Index> pivots;
  };
  Result finalize();

private:
  std::int64_t p_;
  Eigen::Index cols_;
  std::vector<RowVectorXl> rows_;
  std::vector<Eigen::Index> pivotOfRow_;
  std::vector<std::int32_t> rowAtPivot_;
  std::vector<char> unit_;
};

/// A subspace of the truncated ring in canonical reduced-row-echelon form
/// over the monomial coordinates of its context. Canonicity makes equality
/// a matrix comparison. Immutable after construction.
class Subspace {
public:
  static Subspace zero(ContextPtr ctx);
  static Subspace full(ContextPtr ctx);
  static Subspace fromRowSpan(ContextPtr ctx, const std::vector<RowVectorXl>& rows);
  static Subspace fromEchelon(ContextPtr ctx, RowEchelon::Result echelon);

  const ContextPtr& context() const { return ctx_; }
  Eigen::Index dim() const { return rows_.rows(); }
  const MatrixXl& rows() const { return rows_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }
  std::vector<std::int64_t> pivotExponents() const;
  bool isUnitRow(std::size_t i) const { return unit_[i] != 0; }
  // Index of the basis row with the given pivot column, -1 if none.
  std::int32_t rowIndexForPivot(Eigen::Index col) const {
    return rowAtPivot_[static_cast<std::size_t>(col)];
  }

  // Normal form of v modulo this subspace (v becomes 0 iff v is contained).
  void reduceInPlace(RowVectorXl& v) const;
  bool containsVector(RowVectorXl v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const;

private:
  Subspace(ContextPtr ctx, MatrixXl rows, std::vector<Eigen::Index> pivots);

  ContextPtr ctx_;
  MatrixXl rows_;
  std::vector<Eigen::Index> pivots_;
  std::vector<std::int32_t> rowAtPivot_;
  std::vector<char> unit_;
};

// Dense coordinate vector of a series element.
RowVectorXl toCoordinates(const SeriesElement& x);

// Coordinates of (series at row coordinates) * a, truncated at the window.
RowVectorXl multiplyRowByElement(const ContextPtr& ctx, const RowVectorXl& row,
                                 const SeriesElement& a);

// Subspace lattice, all results canonical.
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// lambda(U/V) = dim U - dim V; requires V inside U.
std::int64_t quotientLength(const Subspace& u, const Subspace& v);

// Span of a * U.
Subspace multiplyByElement(const Subspace& u, const SeriesElement& a);

// {x : a^l * x in M}.
Subspace colonByElement(const Subspace& m, const SeriesElement& a, std::int64_t l);

// Intersection of (M : g) over the generators.
Subspace colonByIdeal(const Subspace& m, const std::vector<SeriesElement>& generators);

}  // namespace fibercone

#endif

#pragma once

#include "tauseq/field.hpp"

#include <optional>
#include <vector>

namespace tauseq {

/// Reduced row echelon form of a matrix together with its pivot columns.
struct RowEchelon {
    Mat reduced;                       // same shape as the input
    std::vector<Eigen::Index> pivots;  // pivot column of row r, for r < rank
    [[nodiscard]] Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

RowEchelon row_echelon(Mat m);

Eigen::Index rank(const PrimeField& k, const Mat& m);

/// Basis of the right null space, one vector per column. Free variables are
/// set to unit vectors in increasing column order, so the result is
/// deterministic.
Mat kernel_basis(const PrimeField& k, const Mat& m);

/// Some x with m * x = b, or nothing when the system is inconsistent.
std::optional<Vec> solve(const PrimeField& k, const Mat& m, const Vec& b);

/// Solves m * X = b column by column; nothing if any column is inconsistent.
std::optional<Mat> solve(const PrimeField& k, const Mat& m, const Mat& b);

/// Horizontal concatenation; either side may have zero columns.
Mat hcat(const PrimeField& k, const Mat& a, const Mat& b);
Mat vcat(const PrimeField& k, const Mat& a, const Mat& b);

/// Matrix whose columns are the given vectors, each of length `rows`.
Mat from_columns(const PrimeField& k, Eigen::Index rows, const std::vector<Vec>& columns);

/// Flattens a matrix column-major into a vector.
Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, Eigen::Index rows, Eigen::Index cols);

/// A subspace of F_p^n held as a basis in reduced column echelon form.
///
/// Every basis column has a 1 at its pivot row and zeros at the pivot rows of
/// the other columns, so coordinates are read off directly at the pivots.
class Subspace {
public:
    Subspace() = default;
    /// Span of the columns of `generators` inside F_p^ambient.
    Subspace(const PrimeField& k, Eigen::Index ambient, const Mat& generators);

    static Subspace whole(const PrimeField& k, Eigen::Index n);

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] Eigen::Index ambient() const { return ambient_; }
    [[nodiscard]] Eigen::Index dim() const { return basis_.cols(); }
    [[nodiscard]] const Mat& basis() const { return basis_; }
    [[nodiscard]] const std::vector<Eigen::Index>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(const Vec& v) const;
    /// Coordinates of v in the basis; v must lie in the subspace.
    [[nodiscard]] Vec coords(const Vec& v) const;
    /// Coordinates of each column of m.
    [[nodiscard]] Mat coords(const Mat& m) const;
    /// v minus its component along the basis, measured at the pivot rows.
    [[nodiscard]] Vec reduce(const Vec& v) const;

    /// Quotient F_p^n / this: indices of the non-pivot rows.
    [[nodiscard]] std::vector<Eigen::Index> complement_rows() const;
    /// Matrix of the projection F_p^n -> F_p^n / this, in the basis given by
    /// the unit vectors at complement_rows().
    [[nodiscard]] Mat quotient_map() const;

private:
    PrimeField field_{};
    Eigen::Index ambient_ = 0;
    Mat basis_;
    std::vector<Eigen::Index> pivots_;
};

/// Sum of two subspaces of the same ambient space.
Subspace operator+(const Subspace& a, const Subspace& b);

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const PrimeField& k, const Subspace& a, const Subspace& b);

}  // namespace tauseq

#pragma once

#include <optional>
#include <vector>

#include "quasihom/gaussian.hpp"

namespace qh {

// Dense matrix over the Gaussian rationals.
class GMatrix {
public:
    GMatrix() : rows_(0), cols_(0) {}
    GMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static GMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GaussianRational& at(int i, int j) { return data_[i * cols_ + j]; }
    const GaussianRational& at(int i, int j) const { return data_[i * cols_ + j]; }

    GMatrix transpose() const;
    GMatrix operator*(const GMatrix& o) const;
    GMatrix operator+(const GMatrix& o) const;
    GMatrix operator-(const GMatrix& o) const;
    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    friend bool operator==(const GMatrix& a, const GMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<GaussianRational> data_;
};

// Pivot preference for the exact row reduction; both are complete strategies,
// the choice only affects which solution of an underdetermined system is
// returned (free variables are always set to zero).
enum class PivotOrder { FirstRow, LastRow };

// Row echelon data for repeated exact solves against a fixed matrix.
class RowReducer {
public:
    explicit RowReducer(const GMatrix& a, PivotOrder order = PivotOrder::FirstRow);

    // One solution of A x = b with free variables zero, or nullopt.
    std::optional<std::vector<GaussianRational>> solve(
        const std::vector<GaussianRational>& b) const;
    int rank() const { return static_cast<int>(pivot_cols_.size()); }

private:
    int nrows_, ncols_;
    GMatrix reduced_;    // RREF of A
    GMatrix transform_;  // T with T * A = reduced
    std::vector<int> pivot_cols_;
};

GaussianRational determinant(GMatrix m);
std::optional<GMatrix> inverse(const GMatrix& m);
int rank(const GMatrix& m);
// Canonical kernel basis: one vector per free column of the RREF.
std::vector<std::vector<GaussianRational>> kernel_basis(const GMatrix& m);

// Monic characteristic polynomial det(xI - M), coefficients ascending.
std::vector<GaussianRational> charpoly(const GMatrix& m);

// All Gaussian-rational roots with multiplicity (rational root theorem over
// Z[i], complete for this field). residual is the non-factorable remainder.
struct RootSearch {
    std::vector<std::pair<GaussianRational, int>> roots;
    std::vector<GaussianRational> residual;  // monic; degree 0 iff complete
    bool complete() const { return residual.size() <= 1; }
};
RootSearch gaussian_rational_roots(std::vector<GaussianRational> poly);

// Exact lower Jordan normal form: S^{-1} M S = J with J lower bidiagonal,
// diagonal sorted by non-increasing modulus ((re, im) ties lexicographic,
// blocks of equal eigenvalue by decreasing size), sub-diagonal in {0,1}.
// A matrix already in that shape is returned unchanged with S = I.
// Throws IrrationalSpectrum when the characteristic polynomial has a root
// outside the Gaussian rationals.
struct JordanForm {
    GMatrix j;
    GMatrix s;
    GMatrix s_inv;
    std::vector<GaussianRational> diagonal;
    std::vector<bool> subdiagonal;
};
JordanForm jordan_lower(const GMatrix& m);

}  // namespace qh

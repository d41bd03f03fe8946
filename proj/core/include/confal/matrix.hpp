#pragma once

#include <optional>
#include <vector>

#include "confal/poly.hpp"

namespace confal {

/// Dense matrix of polynomials, row-major. Exact throughout; determinants
/// use fraction-free (Bareiss) elimination.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    PolyMatrix transposed() const;
    PolyMatrix map_entries(const std::map<Var, Poly>& bindings) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    bool is_identity() const;

    Poly determinant() const;  ///< square matrices only

    /// Inverse of a matrix that is unimodular over the polynomial ring
    /// (determinant a nonzero rational); nullopt otherwise.
    std::optional<PolyMatrix> unimodular_inverse() const;

    /// Rank over the fraction field of the polynomial ring.
    int rank() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Poly> entries_;
};

/// Reduced row echelon form over the rationals, in place. Returns the pivot
/// column of each pivot row.
std::vector<int> rat_rref(std::vector<std::vector<Rat>>& m);

/// Basis of the right null space of an m x n rational matrix (n = cols).
/// Deterministic: derived from the RREF free columns in ascending order.
std::vector<std::vector<Rat>> rat_null_space(std::vector<std::vector<Rat>> m, int cols);

/// Solves the square system a * x = b exactly; nullopt when singular.
std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> a,
                                          std::vector<Rat> b);

}  // namespace confal

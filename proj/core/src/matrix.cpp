#include "confal/matrix.hpp"

#include "confal/errors.hpp"

namespace confal {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(Rat(1));
    return m;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

PolyMatrix PolyMatrix::map_entries(const std::map<Var, Poly>& bindings) const {
    PolyMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).subst(bindings);
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw RankMismatch("matrix product shape mismatch");
    PolyMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

bool PolyMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

Poly PolyMatrix::determinant() const {
    if (rows_ != cols_) throw RankMismatch("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return Poly::constant(Rat(1));
    PolyMatrix m = *this;
    bool negate = false;
    Poly prev = Poly::constant(Rat(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Poly::zero();
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                auto q = Poly::exact_div(num, prev);
                if (!q) throw InvalidArgument("Bareiss division failed");
                m.at(i, j) = std::move(*q);
            }
            m.at(i, k) = Poly::zero();
        }
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

std::optional<PolyMatrix> PolyMatrix::unimodular_inverse() const {
    if (rows_ != cols_) return std::nullopt;
    int n = rows_;
    Poly det = determinant();
    auto det_value = det.constant_value();
    if (!det_value || det_value->is_zero()) return std::nullopt;
    Rat inv_det = det_value->inverse();
    PolyMatrix inv(n, n);
    if (n == 0) return inv;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1);
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = at(r, c);
                    ++mc;
                }
                ++mr;
            }
            Poly cof = minor.determinant();
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(j, i) = cof * inv_det;  // adjugate transpose
        }
    }
    return inv;
}

int PolyMatrix::rank() const {
    PolyMatrix m = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        for (int i = r + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Poly scale = m.at(i, c);
            for (int j = 0; j < cols_; ++j)
                m.at(i, j) = m.at(r, c) * m.at(i, j) - scale * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<int> rat_rref(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Rat inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rat>> rat_null_space(std::vector<std::vector<Rat>> m, int cols) {
    std::vector<int> pivots = rat_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> a,
                                          std::vector<Rat> b) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rat_rref(a);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
        return std::nullopt;
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

}  // namespace confal

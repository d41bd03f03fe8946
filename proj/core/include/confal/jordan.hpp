#pragma once

#include <map>
#include <string>
#include <vector>

#include "confal/dlc.hpp"
#include "confal/lca.hpp"
#include "confal/report.hpp"

namespace confal {

/// Finite free Jordan conformal algebra: same presentation shape as a Lie
/// conformal algebra, P^{ij}_k(lam, d) for the lambda-product a_i lam a_j.
class JordanConformalAlgebra {
public:
    static JordanConformalAlgebra make(ConformalStructure data);

    int rank() const { return data_.rank(); }
    const std::vector<std::string>& basis_names() const { return data_.basis; }
    const ConformalStructure& data() const { return data_; }
    const std::map<int, Poly>& entry(int i, int j) const { return data_.entry(i, j); }

    friend bool operator==(const JordanConformalAlgebra& a,
                           const JordanConformalAlgebra& b) {
        return a.data_ == b.data_;
    }

private:
    ConformalStructure data_;
};

/// Differential Jordan coalgebra; coproduct polynomials Q^{ij}_k(x, y).
class DiffJordanCoalgebra {
public:
    static DiffJordanCoalgebra make(CoalgebraStructure data);

    int rank() const { return data_.rank(); }
    const std::vector<std::string>& basis_names() const { return data_.basis; }
    const CoalgebraStructure& data() const { return data_; }
    const std::map<std::pair<int, int>, Poly>& entry(int k) const {
        return data_.entry(k);
    }

    friend bool operator==(const DiffJordanCoalgebra& a, const DiffJordanCoalgebra& b) {
        return a.data_ == b.data_;
    }

private:
    CoalgebraStructure data_;
};

/// Commutativity a_lam b = b_{-lam-d} a:
/// P^{ij}_k(lam, d) - P^{ji}_k(-lam-d, d) = 0.
CheckReport check_jordan_commutativity(const JordanConformalAlgebra& J);

/// The six-term conformal Jordan identity on every basis quadruple,
/// expanded by nested sesquilinear products; parameter subscripts involving
/// d are formal substitutions into the product parameter.
CheckReport check_jordan_identity(const JordanConformalAlgebra& J);

/// Cocommutativity tau Delta = Delta plus the four-leg co-Jordan identity
/// (1 + zeta + zeta^2)(Delta (x) Delta)Delta =
/// (1 + zeta + zeta^2)(I (x) Delta (x) I)(I (x) Delta)Delta,
/// zeta cycling the first three tensor legs. The fourth leg derivation is w.
CheckReport check_cojordan(const DiffJordanCoalgebra& C);

/// Q^{ij}_k(x, y) = P^{ij}_k(x, -x-y), names starred; and the inverse.
DiffJordanCoalgebra dualize_jordan(const JordanConformalAlgebra& J);
JordanConformalAlgebra dualize_jordan_coalgebra(const DiffJordanCoalgebra& C);

/// Current Jordan conformal algebra of a commutative associative product
/// table (constant structure polynomials). The table must be symmetric.
JordanConformalAlgebra jordan_current(
    std::vector<std::string> basis,
    std::map<std::pair<int, int>, std::map<int, Rat>> products);

/// Cur of the dual numbers Q[t]/(t^2): u u = u, u t = t u = t, t t = 0.
JordanConformalAlgebra jordan_dual_numbers();
/// Cur of Q[t]/(t^3).
JordanConformalAlgebra jordan_truncated3();
/// Cur of the rank-3 Jordan algebra of symmetric 2x2 matrices.
JordanConformalAlgebra jordan_sym2();

}  // namespace confal

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "confal/duality.hpp"
#include "confal/lca.hpp"

namespace confal {

/// Finite-dimensional Lie algebra over the rationals given by structure
/// constants [x_i, x_j] = sum_k c_{ij}^k x_k.
struct LieAlgebraSC {
    std::vector<std::string> basis;
    std::map<std::pair<int, int>, std::map<int, Rat>> brackets;

    /// Validates antisymmetry and the classical Jacobi identity (via the
    /// constant-structure conformal checks); throws InvalidArgument.
    static LieAlgebraSC make(std::vector<std::string> basis,
                             std::map<std::pair<int, int>, std::map<int, Rat>> brackets);

    int dim() const { return static_cast<int>(basis.size()); }
    const std::map<int, Rat>& entry(int i, int j) const;
};

/// Finite-dimensional Lie coalgebra: delta(x_k^*) = sum c x_i^* (x) x_j^*.
struct LieCoalgebraSC {
    std::vector<std::string> basis;
    std::map<int, std::map<std::pair<int, int>, Rat>> cobrackets;

    /// Validates co-antisymmetry and classical co-Jacobi; throws.
    static LieCoalgebraSC make(
        std::vector<std::string> basis,
        std::map<int, std::map<std::pair<int, int>, Rat>> cobrackets);

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Current Lie conformal algebra Cur(g): constant structure polynomials
/// P^{ij}_k = c_{ij}^k.
LieConformalAlgebra current_algebra(const LieAlgebraSC& g);

/// Current differential Lie coalgebra with constant coproduct polynomials.
DiffLieCoalgebra current_coalgebra(const LieCoalgebraSC& c);

/// Transpose cobracket of a Lie algebra: delta(x_k^*) = sum c_{ij}^k
/// x_i^* (x) x_j^* (the dual Lie coalgebra of a finite-dimensional g).
LieCoalgebraSC dual_cobracket(const LieAlgebraSC& g);

/// Theta embedding of Cur(V^*) into the conformal dual of Cur(V):
/// an element sum_i p_i(d) (x) phi_i maps to the functional with
/// coordinates p_i(-lam). Injective by construction.
ConformalFunctional theta_embed(const Element& f, int dim_v);

/// Goodness of the Theta image of Cur(g^0): for every k <= window_k and
/// every dual-basis functional phi_j, checks the goodness identity of
/// theta_embed(d^k (x) phi_j) with the current-coalgebra coproduct
/// (x + y)^k delta_{g^0}(phi_j). Indices in `boundary` have no cobracket at
/// this truncation and report window-too-small.
CheckReport verify_theta_goodness(
    const LieAlgebraSC& g,
    const std::map<int, std::map<std::pair<int, int>, Rat>>& cobracket, int window_k,
    const std::set<int>& boundary = {});

/// The rank-(N+1) truncation of the Lie algebra with [e_0, e_k] = e_{k-1}
/// (k >= 2), [e_j, e_0] = -e_{j-1} (j >= 2); closed since brackets lower
/// the nonzero index. Bundled with its current conformal algebra, the J_a
/// ideal constructor and the dual-coalgebra window
/// delta(e_i^*) = e_0^* (x) e_{i+1}^* - e_{i+1}^* (x) e_0^* for i < N.
struct MichaelisData {
    int top_index = 0;  // N
    LieAlgebraSC lie;
    LieConformalAlgebra conformal;
    std::map<int, std::map<std::pair<int, int>, Rat>> coalgebra_window;

    /// J_a = a(d) C[d] e_0 (+) lines 1..N; a = 0 drops the e_0 line.
    DiagonalIdeal ideal(const Poly& a) const;
};
MichaelisData michaelis(int top_index);

/// Dual-basis goodness candidate for the michaelis coalgebra window; the
/// boundary functional e_N^* carries no candidate.
GoodnessCandidate michaelis_window_candidate(const MichaelisData& m);

/// Graded quotient of the Witt-type algebra: rank N+1 with
/// [L_i lam L_j] = (2 lam + d) L_{i+j} for i + j <= N, zero beyond.
LieConformalAlgebra witt_truncated(int top_index);

/// Rank-1 Virasoro-type algebra, [L lam L] = (2 lam + d) L.
LieConformalAlgebra virasoro();

LieAlgebraSC sl2();
LieAlgebraSC heisenberg3();
/// Two-dimensional nonabelian Lie algebra, [x, y] = x.
LieAlgebraSC nonabelian2();

}  // namespace confal

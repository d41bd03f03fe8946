#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confal/dlc.hpp"
#include "confal/lca.hpp"
#include "confal/matrix.hpp"
#include "confal/poly.hpp"
#include "confal/report.hpp"

namespace confal {

/// Element of the conformal dual of a free rank-n module, as coordinate
/// polynomials: f_lam(a_i) = coords[i](lam). The d-action is
/// (d f)_lam = -lam f_lam. `truncated` marks a window onto an infinite
/// family (coordinates beyond the window are not asserted to vanish).
struct ConformalFunctional {
    std::map<int, Poly> coords;  // values in C[lam]
    int ambient_rank = 0;
    bool truncated = false;

    static ConformalFunctional dual_basis(int i, int rank);
    ConformalFunctional d_action() const;
    bool is_zero() const { return coords.empty(); }

    friend bool operator==(const ConformalFunctional& a, const ConformalFunctional& b) {
        return a.coords == b.coords && a.ambient_rank == b.ambient_rank;
    }
};

/// C[d]-module homomorphism F(a_i) = sum_k M[i][k](d) b_k; rows index the
/// source basis, columns the target basis.
class ModuleHom {
public:
    static ModuleHom make(PolyMatrix matrix);
    static ModuleHom identity(int n);

    int source_rank() const { return matrix_.rows(); }
    int target_rank() const { return matrix_.cols(); }
    const PolyMatrix& matrix() const { return matrix_; }
    const Poly& at(int i, int k) const { return matrix_.at(i, k); }

    Element apply(const Element& e) const;
    std::map<int, Poly> apply_coeffs(const std::map<int, Poly>& coeffs) const;

    friend bool operator==(const ModuleHom& a, const ModuleHom& b) {
        return a.matrix_ == b.matrix_;
    }

private:
    PolyMatrix matrix_;
};

/// Composition "first, then second"; shapes must chain.
ModuleHom compose(const ModuleHom& first, const ModuleHom& second);

/// Transpose homomorphism between the conformal duals:
/// F*(b_k^*) = sum_i F_ik(-d) a_i^*.
ModuleHom transpose_hom(const ModuleHom& F);

/// C[d]-independent list of conformal functionals over a common ambient rank.
struct SubspaceBasis {
    std::vector<ConformalFunctional> elements;

    /// Validates pairwise rank agreement and C[d]-independence (rank of the
    /// coordinate matrix over the fraction field of C[lam]).
    static SubspaceBasis make(std::vector<ConformalFunctional> elements);
    int size() const { return static_cast<int>(elements.size()); }
};

/// f_lam(sum q_i(d) a_i) = sum q_i(lam) coords[i](lam). Coefficients may
/// carry free parameters mu/nu; only d is substituted.
Poly evaluate_functional(const ConformalFunctional& f, const std::map<int, Poly>& coeffs);
Poly evaluate_functional(const ConformalFunctional& f, const Element& e);

/// [Phi_mu(f (x) g)]_lam(a (x) b) = f_mu(a) g_{lam-mu}(b).
Poly evaluate_phi(const ConformalFunctional& f, const ConformalFunctional& g,
                  const Element& a, const Element& b);

/// [pi_mu(f)]_lam(a (x) b) = f_lam([a_mu b]).
Poly evaluate_pi(const LieConformalAlgebra& L, const ConformalFunctional& f,
                 const Element& a, const Element& b);

/// [Psi_{x,y,z}(f (x) g (x) h)](a (x) b (x) c) = f_x(a) g_y(b) h_z(c).
Poly evaluate_psi(const ConformalFunctional& f, const ConformalFunctional& g,
                  const ConformalFunctional& h, const Element& a, const Element& b,
                  const Element& c);

/// Dual coalgebra: Q^{ij}_k(x, y) = P^{ij}_k(x, -x-y); basis names starred.
DiffLieCoalgebra dualize_algebra(const LieConformalAlgebra& L);

/// Inverse construction: P^{ij}_k(lam, d) = Q^{ij}_k(lam, -lam-d).
LieConformalAlgebra dualize_coalgebra(const DiffLieCoalgebra& C);

/// F([a_i lam a_j]) = [F(a_i) lam F(a_j)] on all basis pairs.
CheckReport check_algebra_hom(const ModuleHom& F, const LieConformalAlgebra& source,
                              const LieConformalAlgebra& target);

/// (F (x) F) delta = delta F on all basis elements.
CheckReport check_coalgebra_hom(const ModuleHom& F, const DiffLieCoalgebra& source,
                                const DiffLieCoalgebra& target);

/// Candidate coproduct on a subspace of the conformal dual: delta[t] is a
/// Tensor2 whose indices refer to `basis.elements`. A basis functional with
/// no delta entry is a truncation boundary and yields window-too-small.
struct GoodnessCandidate {
    SubspaceBasis basis;
    std::map<int, Tensor2> delta;
};

/// Checks Phi_{-mu}(delta(f)) = pi_mu(f) on every basis pair of L, i.e.
/// f_lam([a_mu b]) = sum (f_(1))_{-mu}(a) (f_(2))_{lam+mu}(b).
CheckReport verify_goodness(const LieConformalAlgebra& L, const GoodnessCandidate& cand);

/// The identity above for a single functional, with delta expressed over
/// the `legs` functionals; failures are tagged {tag, p, q}.
void check_goodness_identity(const LieConformalAlgebra& L, const ConformalFunctional& f,
                             const Tensor2& delta,
                             const std::vector<ConformalFunctional>& legs, int tag,
                             CheckReport& report);

/// The dual-basis candidate with delta taken from dualize_algebra(L).
GoodnessCandidate dual_basis_candidate(const LieConformalAlgebra& L);

/// chi / phi / psi in the canonical double-dual bases of a free rank-n
/// module, computed from their defining evaluations.
struct AdjunctionMaps {
    ModuleHom chi;
    ModuleHom phi;
    ModuleHom psi;
};
AdjunctionMaps adjunction_maps(int rank);

/// alpha(f) = f^0 . phi_M for f : L -> M^{*c}; beta(g) = g^* . psi_L for
/// g : M -> L^0. Ranks: f is (rank L) x (rank M), g the reverse.
ModuleHom adjunction_alpha(const ModuleHom& f);
ModuleHom adjunction_beta(const ModuleHom& g);

/// Triangle identities at finite rank: the composites
/// (psi_L)^0 . phi_{L^0} (algebra side) and (phi_M)^* . psi_{M^{*c}}
/// (coalgebra side) must be identity matrices; also checks
/// beta(alpha(id)) = id on the matching identity sample hom.
CheckReport verify_triangles_algebra(const LieConformalAlgebra& L);
CheckReport verify_triangles_coalgebra(const DiffLieCoalgebra& M);

/// Annihilator W = { g in L^{*c} | g_lam(I) = 0 } of a diagonal ideal, with
/// the induced coproduct from the quotient by I's saturation, goodness
/// certified on L. `kept` are the ambient indices spanning W.
struct AnnihilatorResult {
    std::vector<int> kept;
    SubspaceBasis basis;
    DiffLieCoalgebra induced;
    GoodnessCandidate candidate;
    CheckReport goodness;
};
AnnihilatorResult annihilator(const LieConformalAlgebra& L, const DiagonalIdeal& I);

/// True iff f annihilates some ideal of the supplied family; the witness is
/// the index of the first such ideal, -1 otherwise.
struct LocMembership {
    bool member = false;
    int witness = -1;
};
LocMembership loc_membership(const ConformalFunctional& f, const LieConformalAlgebra& L,
                             const std::vector<DiagonalIdeal>& family);

/// "name" <-> "name*" (used by the dualization constructors).
std::string toggle_star(const std::string& name);

}  // namespace confal

#include "confal/duality.hpp"

#include "confal/errors.hpp"

namespace confal {

namespace {

const std::map<Var, Poly>& lam_to_mu() {
    static const std::map<Var, Poly> m = {{Var::Lam, Poly::mu()}};
    return m;
}

const std::map<Var, Poly>& lam_to_minus_mu() {
    static const std::map<Var, Poly> m = {{Var::Lam, -Poly::mu()}};
    return m;
}

const std::map<Var, Poly>& lam_to_lam_minus_mu() {
    static const std::map<Var, Poly> m = {{Var::Lam, Poly::lam() - Poly::mu()}};
    return m;
}

const std::map<Var, Poly>& lam_to_lam_plus_mu() {
    static const std::map<Var, Poly> m = {{Var::Lam, Poly::lam() + Poly::mu()}};
    return m;
}

void check_rank(const ConformalFunctional& f, int rank, const char* what) {
    if (f.ambient_rank != rank)
        throw RankMismatch(std::string("functional rank mismatch in ") + what);
}

}  // namespace

ConformalFunctional ConformalFunctional::dual_basis(int i, int rank) {
    if (i < 0 || i >= rank) throw IndexOutOfRank("dual basis index out of rank");
    ConformalFunctional f;
    f.ambient_rank = rank;
    f.coords.emplace(i, Poly::constant(Rat(1)));
    return f;
}

ConformalFunctional ConformalFunctional::d_action() const {
    ConformalFunctional out;
    out.ambient_rank = ambient_rank;
    out.truncated = truncated;
    for (const auto& [i, p] : coords) out.coords.emplace(i, -Poly::lam() * p);
    return out;
}

ModuleHom ModuleHom::make(PolyMatrix matrix) {
    for (int i = 0; i < matrix.rows(); ++i)
        for (int k = 0; k < matrix.cols(); ++k)
            if (!matrix.at(i, k).uses_only(kVarsD))
                throw InvalidArgument("module hom entries must lie in C[d]");
    ModuleHom h;
    h.matrix_ = std::move(matrix);
    return h;
}

ModuleHom ModuleHom::identity(int n) { return make(PolyMatrix::identity(n)); }

std::map<int, Poly> ModuleHom::apply_coeffs(const std::map<int, Poly>& coeffs) const {
    std::map<int, Poly> out;
    for (const auto& [i, p] : coeffs) {
        if (i < 0 || i >= source_rank())
            throw IndexOutOfRank("hom applied to out-of-rank index");
        for (int k = 0; k < target_rank(); ++k) {
            if (matrix_.at(i, k).is_zero()) continue;
            Poly& slot = out[k];
            slot += p * matrix_.at(i, k);
            if (slot.is_zero()) out.erase(k);
        }
    }
    return out;
}

Element ModuleHom::apply(const Element& e) const { return Element{apply_coeffs(e.coeffs)}; }

ModuleHom compose(const ModuleHom& first, const ModuleHom& second) {
    if (first.target_rank() != second.source_rank())
        throw RankMismatch("hom composition shape mismatch");
    return ModuleHom::make(first.matrix() * second.matrix());
}

ModuleHom transpose_hom(const ModuleHom& F) {
    static const std::map<Var, Poly> negate_d = {{Var::D, -Poly::d()}};
    return ModuleHom::make(F.matrix().transposed().map_entries(negate_d));
}

SubspaceBasis SubspaceBasis::make(std::vector<ConformalFunctional> elements) {
    if (!elements.empty()) {
        const int rank = elements.front().ambient_rank;
        PolyMatrix coords(static_cast<int>(elements.size()), rank);
        for (std::size_t t = 0; t < elements.size(); ++t) {
            if (elements[t].ambient_rank != rank)
                throw RankMismatch("subspace basis over mixed ambient ranks");
            for (const auto& [i, p] : elements[t].coords)
                coords.at(static_cast<int>(t), i) = p;
        }
        if (coords.rank() != static_cast<int>(elements.size()))
            throw InvalidArgument("subspace basis is C[d]-dependent");
    }
    SubspaceBasis b;
    b.elements = std::move(elements);
    return b;
}

Poly evaluate_functional(const ConformalFunctional& f, const std::map<int, Poly>& coeffs) {
    static const std::map<Var, Poly> d_to_lam = {{Var::D, Poly::lam()}};
    Poly out;
    for (const auto& [i, q] : coeffs) {
        if (i < 0 || i >= f.ambient_rank)
            throw RankMismatch("element index beyond functional ambient rank");
        auto it = f.coords.find(i);
        if (it == f.coords.end()) continue;
        out += q.subst(d_to_lam) * it->second;
    }
    return out;
}

Poly evaluate_functional(const ConformalFunctional& f, const Element& e) {
    return evaluate_functional(f, e.coeffs);
}

Poly evaluate_phi(const ConformalFunctional& f, const ConformalFunctional& g,
                  const Element& a, const Element& b) {
    if (f.ambient_rank != g.ambient_rank)
        throw RankMismatch("phi over mixed ambient ranks");
    Poly left = evaluate_functional(f, a).subst(lam_to_mu());
    Poly right = evaluate_functional(g, b).subst(lam_to_lam_minus_mu());
    return left * right;
}

Poly evaluate_pi(const LieConformalAlgebra& L, const ConformalFunctional& f,
                 const Element& a, const Element& b) {
    check_rank(f, L.rank(), "pi");
    auto bracket = conformal_product(L.data(), a.coeffs, b.coeffs, Var::Mu);
    return evaluate_functional(f, bracket);
}

Poly evaluate_psi(const ConformalFunctional& f, const ConformalFunctional& g,
                  const ConformalFunctional& h, const Element& a, const Element& b,
                  const Element& c) {
    if (f.ambient_rank != g.ambient_rank || g.ambient_rank != h.ambient_rank)
        throw RankMismatch("psi over mixed ambient ranks");
    static const std::map<Var, Poly> to_x = {{Var::Lam, Poly::x()}};
    static const std::map<Var, Poly> to_y = {{Var::Lam, Poly::y()}};
    static const std::map<Var, Poly> to_z = {{Var::Lam, Poly::z()}};
    return evaluate_functional(f, a).subst(to_x) * evaluate_functional(g, b).subst(to_y) *
           evaluate_functional(h, c).subst(to_z);
}

std::string toggle_star(const std::string& name) {
    if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
    return name + "*";
}

DiffLieCoalgebra dualize_algebra(const LieConformalAlgebra& L) {
    static const std::map<Var, Poly> to_legs = {{Var::Lam, Poly::x()},
                                                {Var::D, -Poly::x() - Poly::y()}};
    CoalgebraStructure out;
    for (const auto& name : L.basis_names()) out.basis.push_back(toggle_star(name));
    for (const auto& [ij, terms] : L.data().table)
        for (const auto& [k, P] : terms)
            out.set_entry(k, ij.first, ij.second, P.subst(to_legs));
    return DiffLieCoalgebra::make(std::move(out));
}

LieConformalAlgebra dualize_coalgebra(const DiffLieCoalgebra& C) {
    static const std::map<Var, Poly> to_bracket = {{Var::X, Poly::lam()},
                                                   {Var::Y, -Poly::lam() - Poly::d()}};
    ConformalStructure out;
    for (const auto& name : C.basis_names()) out.basis.push_back(toggle_star(name));
    for (const auto& [k, terms] : C.data().table)
        for (const auto& [ij, Q] : terms)
            out.set_entry(ij.first, ij.second, k, Q.subst(to_bracket));
    return LieConformalAlgebra::make(std::move(out));
}

CheckReport check_algebra_hom(const ModuleHom& F, const LieConformalAlgebra& source,
                              const LieConformalAlgebra& target) {
    if (F.source_rank() != source.rank() || F.target_rank() != target.rank())
        throw RankMismatch("hom shape does not match source/target");
    CheckReport report;
    for (int i = 0; i < source.rank(); ++i)
        for (int j = 0; j < source.rank(); ++j) {
            // F([a_i lam a_j])
            std::map<int, Poly> lhs;
            for (const auto& [k, P] : source.entry(i, j))
                for (const auto& [l, q] : F.apply_coeffs({{k, P}})) {
                    Poly& slot = lhs[l];
                    slot += q;
                    if (slot.is_zero()) lhs.erase(l);
                }
            // [F(a_i) lam F(a_j)]
            std::map<int, Poly> row_i, row_j;
            for (int k = 0; k < target.rank(); ++k) {
                if (!F.at(i, k).is_zero()) row_i[k] = F.at(i, k);
                if (!F.at(j, k).is_zero()) row_j[k] = F.at(j, k);
            }
            auto rhs = conformal_product(target.data(), row_i, row_j, Var::Lam);
            for (const auto& [l, q] : rhs) {
                Poly& slot = lhs[l];
                slot -= q;
                if (slot.is_zero()) lhs.erase(l);
            }
            for (const auto& [l, r] : lhs) report.add_failure({i, j, l}, r);
        }
    return report;
}

CheckReport check_coalgebra_hom(const ModuleHom& F, const DiffLieCoalgebra& source,
                                const DiffLieCoalgebra& target) {
    if (F.source_rank() != source.rank() || F.target_rank() != target.rank())
        throw RankMismatch("hom shape does not match source/target");
    static const std::map<Var, Poly> d_to_x = {{Var::D, Poly::x()}};
    static const std::map<Var, Poly> d_to_y = {{Var::D, Poly::y()}};
    CheckReport report;
    for (int k = 0; k < source.rank(); ++k) {
        Tensor2 residual;
        // (F (x) F) delta_source(c_k): the hom entry on leg 1 carries x, on
        // leg 2 carries y.
        for (const auto& [ij, Q] : source.entry(k))
            for (int p = 0; p < target.rank(); ++p) {
                if (F.at(ij.first, p).is_zero()) continue;
                Poly left = F.at(ij.first, p).subst(d_to_x);
                for (int q = 0; q < target.rank(); ++q) {
                    if (F.at(ij.second, q).is_zero()) continue;
                    residual.add(p, q, Q * left * F.at(ij.second, q).subst(d_to_y));
                }
            }
        // minus delta_target(F(c_k))
        Element image;
        for (int l = 0; l < target.rank(); ++l)
            if (!F.at(k, l).is_zero()) image.coeffs.emplace(l, F.at(k, l));
        Tensor2 rhs = coproduct_apply(target, image);
        for (const auto& [pq, t] : rhs.terms) residual.add(pq.first, pq.second, -t);
        for (const auto& [pq, r] : residual.terms)
            report.add_failure({k, pq.first, pq.second}, r);
    }
    return report;
}

GoodnessCandidate dual_basis_candidate(const LieConformalAlgebra& L) {
    GoodnessCandidate cand;
    std::vector<ConformalFunctional> basis;
    for (int i = 0; i < L.rank(); ++i)
        basis.push_back(ConformalFunctional::dual_basis(i, L.rank()));
    cand.basis = SubspaceBasis::make(std::move(basis));
    DiffLieCoalgebra dual = dualize_algebra(L);
    for (int k = 0; k < L.rank(); ++k) {
        Tensor2 t;
        for (const auto& [ij, Q] : dual.entry(k)) t.add(ij.first, ij.second, Q);
        cand.delta.emplace(k, std::move(t));
    }
    return cand;
}

void check_goodness_identity(const LieConformalAlgebra& L, const ConformalFunctional& f,
                             const Tensor2& delta,
                             const std::vector<ConformalFunctional>& legs, int tag,
                             CheckReport& report) {
    const int n = L.rank();
    // Leg substitutions of Phi_{-mu}: d^a on leg 1 contributes mu^a, d^b on
    // leg 2 contributes (-lam-mu)^b.
    static const std::map<Var, Poly> phi_legs = {{Var::X, Poly::mu()},
                                                 {Var::Y, -Poly::lam() - Poly::mu()}};
    check_rank(f, n, "goodness identity");
    for (const auto& leg : legs) check_rank(leg, n, "goodness identity");
    for (const auto& [uv, poly] : delta.terms)
        if (uv.first < 0 || uv.first >= static_cast<int>(legs.size()) ||
            uv.second < 0 || uv.second >= static_cast<int>(legs.size()))
            throw IndexOutOfRank("coproduct candidate indexes outside the subspace");

    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            Poly lhs = evaluate_pi(L, f, Element::basis(p), Element::basis(q));
            Poly rhs;
            for (const auto& [uv, poly] : delta.terms) {
                Poly first = evaluate_functional(legs[uv.first], Element::basis(p))
                                 .subst(lam_to_minus_mu());
                if (first.is_zero()) continue;
                Poly second = evaluate_functional(legs[uv.second], Element::basis(q))
                                  .subst(lam_to_lam_plus_mu());
                rhs += poly.subst(phi_legs) * first * second;
            }
            Poly residual = lhs - rhs;
            if (!residual.is_zero()) report.add_failure({tag, p, q}, residual);
        }
}

CheckReport verify_goodness(const LieConformalAlgebra& L, const GoodnessCandidate& cand) {
    CheckReport report;
    for (const auto& f : cand.basis.elements) check_rank(f, L.rank(), "verify_goodness");
    for (int t = 0; t < cand.basis.size(); ++t) {
        auto dit = cand.delta.find(t);
        if (dit == cand.delta.end()) {
            report.mark_window_too_small(
                {t}, "no coproduct candidate for basis functional " + std::to_string(t));
            continue;
        }
        check_goodness_identity(L, cand.basis.elements[t], dit->second,
                                cand.basis.elements, t, report);
    }
    return report;
}

namespace {

/// The double-dual evaluation map v_i -> (f -> f_{-mu}(v_i)) in the
/// canonical bases; chi, phi and psi all restrict to it at finite rank.
ModuleHom evaluation_hom(int rank) {
    static const std::map<Var, Poly> lam_to_neg_d = {{Var::Lam, -Poly::d()}};
    static const std::map<Var, Poly> mu_to_lam = {{Var::Mu, Poly::lam()}};
    PolyMatrix m(rank, rank);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            // coordinate j of the image functional: (u_j^*)_{-mu}(v_i)
            Poly value = evaluate_functional(ConformalFunctional::dual_basis(j, rank),
                                             Element::basis(i))
                             .subst(lam_to_minus_mu());
            // A functional with coordinates p_j(lam) is the module element
            // sum p_j(-d) (u_j^*)^* of the double dual.
            m.at(i, j) = value.subst(mu_to_lam).subst(lam_to_neg_d);
        }
    }
    return ModuleHom::make(std::move(m));
}

}  // namespace

AdjunctionMaps adjunction_maps(int rank) {
    return AdjunctionMaps{evaluation_hom(rank), evaluation_hom(rank),
                          evaluation_hom(rank)};
}

ModuleHom adjunction_alpha(const ModuleHom& f) {
    ModuleHom phi_m = adjunction_maps(f.target_rank()).phi;
    return compose(phi_m, transpose_hom(f));
}

ModuleHom adjunction_beta(const ModuleHom& g) {
    ModuleHom psi_l = adjunction_maps(g.target_rank()).psi;
    return compose(psi_l, transpose_hom(g));
}

namespace {

CheckReport triangle_report(int rank) {
    CheckReport report;
    AdjunctionMaps maps = adjunction_maps(rank);
    // (psi)^0 . phi on the algebra side and (phi)^* . psi on the coalgebra
    // side; at finite rank both reduce to these matrix composites.
    ModuleHom algebra_side = compose(maps.phi, transpose_hom(maps.psi));
    ModuleHom coalgebra_side = compose(maps.psi, transpose_hom(maps.phi));
    if (!algebra_side.matrix().is_identity()) {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                Poly expect = i == j ? Poly::constant(Rat(1)) : Poly::zero();
                Poly r = algebra_side.at(i, j) - expect;
                if (!r.is_zero()) report.add_failure({0, i, j}, r, "triangle (psi)^0 . phi");
            }
    }
    if (!coalgebra_side.matrix().is_identity()) {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                Poly expect = i == j ? Poly::constant(Rat(1)) : Poly::zero();
                Poly r = coalgebra_side.at(i, j) - expect;
                if (!r.is_zero()) report.add_failure({1, i, j}, r, "triangle (phi)^* . psi");
            }
    }
    // beta(alpha(id)) = id on the identity sample hom.
    ModuleHom id = ModuleHom::identity(rank);
    ModuleHom round = adjunction_beta(adjunction_alpha(id));
    if (!(round == id)) report.add_failure({2}, Poly::zero(), "beta(alpha(id)) != id");
    return report;
}

}  // namespace

CheckReport verify_triangles_algebra(const LieConformalAlgebra& L) {
    return triangle_report(L.rank());
}

CheckReport verify_triangles_coalgebra(const DiffLieCoalgebra& M) {
    return triangle_report(M.rank());
}

AnnihilatorResult annihilator(const LieConformalAlgebra& L, const DiagonalIdeal& I) {
    if (!check_ideal(L, I).passed())
        throw NotAnIdeal("diagonal submodule is not an ideal");
    DiagonalIdeal saturation;
    for (const auto& [i, g] : I.gens) saturation.gens[i] = Poly::constant(Rat(1));
    AnnihilatorResult result;
    LieConformalAlgebra quotient = quotient_by_line_ideal(L, saturation, &result.kept);
    result.induced = dualize_algebra(quotient);

    std::vector<ConformalFunctional> basis;
    for (int ambient : result.kept)
        basis.push_back(ConformalFunctional::dual_basis(ambient, L.rank()));
    result.basis = SubspaceBasis::make(basis);

    result.candidate.basis = result.basis;
    for (int t = 0; t < static_cast<int>(result.kept.size()); ++t) {
        Tensor2 delta;
        for (const auto& [ij, Q] : result.induced.entry(t))
            delta.add(ij.first, ij.second, Q);
        result.candidate.delta.emplace(t, std::move(delta));
    }
    result.goodness = verify_goodness(L, result.candidate);
    return result;
}

LocMembership loc_membership(const ConformalFunctional& f, const LieConformalAlgebra& L,
                             const std::vector<DiagonalIdeal>& family) {
    check_rank(f, L.rank(), "loc_membership");
    for (std::size_t t = 0; t < family.size(); ++t) {
        bool annihilates = true;
        for (const auto& [i, gen] : family[t].gens) {
            Poly value = evaluate_functional(f, Element::single(i, gen));
            if (!value.is_zero()) {
                annihilates = false;
                break;
            }
        }
        if (annihilates) return LocMembership{true, static_cast<int>(t)};
    }
    return LocMembership{false, -1};
}

}  // namespace confal

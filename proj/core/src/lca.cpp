#include "confal/lca.hpp"

#include "confal/errors.hpp"

namespace confal {

namespace {

const std::map<int, Poly> kEmptyEntry;

void check_index(int i, int rank) {
    if (i < 0 || i >= rank) throw IndexOutOfRank("basis index out of rank");
}

}  // namespace

Element Element::single(int i, Poly p) {
    Element e;
    if (!p.is_zero()) e.coeffs.emplace(i, std::move(p));
    return e;
}

const std::map<int, Poly>& ConformalStructure::entry(int i, int j) const {
    auto it = table.find({i, j});
    return it == table.end() ? kEmptyEntry : it->second;
}

void ConformalStructure::set_entry(int i, int j, int k, Poly p) {
    if (p.is_zero()) return;
    table[{i, j}][k] = std::move(p);
}

void ConformalStructure::validate() const {
    const int n = rank();
    for (const auto& [ij, terms] : table) {
        check_index(ij.first, n);
        check_index(ij.second, n);
        if (terms.empty())
            throw InvalidArgument("empty structure entry stored");
        for (const auto& [k, p] : terms) {
            check_index(k, n);
            if (p.is_zero()) throw InvalidArgument("zero structure polynomial stored");
            if (!p.uses_only(kVarsLamD))
                throw InvalidArgument("structure polynomial outside C[lam, d]");
        }
    }
}

std::map<int, Poly> conformal_product(const ConformalStructure& s,
                                      const std::map<int, Poly>& u,
                                      const std::map<int, Poly>& v, Var param) {
    const Poly param_poly = Poly::variable(param);
    const std::map<Var, Poly> left_shift = {{Var::D, -param_poly}};
    const std::map<Var, Poly> right_shift = {{Var::D, param_poly + Poly::d()}};
    const std::map<Var, Poly> table_shift = {{Var::Lam, param_poly}};

    std::map<int, Poly> out;
    for (const auto& [i, p] : u) {
        Poly pl = p.subst(left_shift);
        if (pl.is_zero()) continue;
        for (const auto& [j, q] : v) {
            const auto& terms = s.entry(i, j);
            if (terms.empty()) continue;
            Poly qr = pl * q.subst(right_shift);
            if (qr.is_zero()) continue;
            for (const auto& [k, P] : terms) {
                Poly contrib = qr * (param == Var::Lam ? P : P.subst(table_shift));
                if (contrib.is_zero()) continue;
                Poly& slot = out[k];
                slot += contrib;
                if (slot.is_zero()) out.erase(k);
            }
        }
    }
    return out;
}

LieConformalAlgebra LieConformalAlgebra::make(ConformalStructure data) {
    data.validate();
    LieConformalAlgebra L;
    L.data_ = std::move(data);
    return L;
}

DiagonalIdeal DiagonalIdeal::lines(const std::vector<int>& indices) {
    DiagonalIdeal I;
    for (int i : indices) I.gens[i] = Poly::constant(Rat(1));
    return I;
}

bool DiagonalIdeal::is_line_ideal() const {
    for (const auto& [i, g] : gens) {
        auto c = g.constant_value();
        if (!c || !c->is_one()) return false;
    }
    return true;
}

LambdaElement lambda_bracket(const LieConformalAlgebra& L, const Element& a,
                             const Element& b) {
    for (const auto& [i, p] : a.coeffs) check_index(i, L.rank());
    for (const auto& [j, q] : b.coeffs) check_index(j, L.rank());
    return LambdaElement{conformal_product(L.data(), a.coeffs, b.coeffs, Var::Lam)};
}

CheckReport check_skew(const LieConformalAlgebra& L) {
    CheckReport report;
    const int n = L.rank();
    const std::map<Var, Poly> flip = {{Var::Lam, -Poly::lam() - Poly::d()}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::map<int, Poly> residuals;
            for (const auto& [k, p] : L.entry(i, j)) residuals[k] += p;
            for (const auto& [k, p] : L.entry(j, i)) residuals[k] += p.subst(flip);
            for (const auto& [k, r] : residuals)
                if (!r.is_zero()) report.add_failure({i, j, k}, r);
        }
    return report;
}

CheckReport check_jacobi(const LieConformalAlgebra& L) {
    CheckReport report;
    const int n = L.rank();
    const std::map<Var, Poly> to_mu_shift = {{Var::Lam, Poly::mu()},
                                             {Var::D, Poly::lam() + Poly::d()}};
    const std::map<Var, Poly> inner_skew = {{Var::D, -Poly::lam() - Poly::mu()}};
    const std::map<Var, Poly> to_lam_plus_mu = {{Var::Lam, Poly::lam() + Poly::mu()}};
    const std::map<Var, Poly> d_to_mu_shift = {{Var::D, Poly::mu() + Poly::d()}};
    const std::map<Var, Poly> to_mu = {{Var::Lam, Poly::mu()}};

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::map<int, Poly> residual;
                // [a_i lam [a_j mu a_k]]
                for (const auto& [m, Pjk] : L.entry(j, k)) {
                    Poly lhs_factor = Pjk.subst(to_mu_shift);
                    for (const auto& [l, Pim] : L.entry(i, m))
                        residual[l] += lhs_factor * Pim;
                }
                // -[[a_i lam a_j]_{lam+mu} a_k]
                for (const auto& [m, Pij] : L.entry(i, j)) {
                    Poly mid_factor = Pij.subst(inner_skew);
                    for (const auto& [l, Pmk] : L.entry(m, k))
                        residual[l] -= mid_factor * Pmk.subst(to_lam_plus_mu);
                }
                // -[a_j mu [a_i lam a_k]]
                for (const auto& [m, Pik] : L.entry(i, k)) {
                    Poly rhs_factor = Pik.subst(d_to_mu_shift);
                    for (const auto& [l, Pjm] : L.entry(j, m))
                        residual[l] -= rhs_factor * Pjm.subst(to_mu);
                }
                for (const auto& [l, r] : residual)
                    if (!r.is_zero()) report.add_failure({i, j, k, l}, r);
            }
    return report;
}

LieConformalAlgebra base_change(const LieConformalAlgebra& L, const PolyMatrix& C) {
    const int n = L.rank();
    if (C.rows() != n || C.cols() != n)
        throw RankMismatch("base change matrix shape mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!C.at(i, j).uses_only(kVarsD))
                throw InvalidArgument("base change entries must lie in C[d]");
    auto inv = C.unimodular_inverse();
    if (!inv) throw NotUnimodular("base change matrix is not unimodular over C[d]");

    ConformalStructure out;
    out.basis = L.basis_names();
    for (int i = 0; i < n; ++i) {
        std::map<int, Poly> row_i;
        for (int p = 0; p < n; ++p)
            if (!C.at(i, p).is_zero()) row_i[p] = C.at(i, p);
        for (int j = 0; j < n; ++j) {
            std::map<int, Poly> row_j;
            for (int q = 0; q < n; ++q)
                if (!C.at(j, q).is_zero()) row_j[q] = C.at(j, q);
            auto bracket = conformal_product(L.data(), row_i, row_j, Var::Lam);
            // Re-express on the primed basis through C^{-1}.
            std::map<int, Poly> primed;
            for (const auto& [k, coeff] : bracket)
                for (int l = 0; l < n; ++l) {
                    if (inv->at(k, l).is_zero()) continue;
                    Poly& slot = primed[l];
                    slot += coeff * inv->at(k, l);
                    if (slot.is_zero()) primed.erase(l);
                }
            for (auto& [l, coeff] : primed) out.set_entry(i, j, l, std::move(coeff));
        }
    }
    return LieConformalAlgebra::make(std::move(out));
}

namespace {

/// Is `le` a member of C[lam] (x) I for the diagonal ideal I?
bool in_lambda_ideal(const LambdaElement& le, const DiagonalIdeal& I,
                     std::map<int, Poly>* bad_coords) {
    bool ok = true;
    for (const auto& [k, coeff] : le.coeffs) {
        auto it = I.gens.find(k);
        if (it == I.gens.end()) {
            if (bad_coords) (*bad_coords)[k] = coeff;
            ok = false;
            continue;
        }
        if (!Poly::exact_div(coeff, it->second)) {
            if (bad_coords) (*bad_coords)[k] = coeff;
            ok = false;
        }
    }
    return ok;
}

}  // namespace

CheckReport check_ideal(const LieConformalAlgebra& L, const DiagonalIdeal& I) {
    CheckReport report;
    const int n = L.rank();
    for (const auto& [i, gen] : I.gens) {
        check_index(i, n);
        if (gen.is_zero() || !gen.uses_only(kVarsD))
            throw InvalidArgument("ideal generator must be a nonzero polynomial in d");
    }
    for (int j = 0; j < n; ++j) {
        for (const auto& [i, gen] : I.gens) {
            LambdaElement br =
                lambda_bracket(L, Element::basis(j), Element::single(i, gen));
            std::map<int, Poly> bad;
            if (!in_lambda_ideal(br, I, &bad))
                for (const auto& [k, coeff] : bad)
                    report.add_failure({j, i, k}, coeff);
        }
    }
    return report;
}

LieConformalAlgebra quotient_by_line_ideal(const LieConformalAlgebra& L,
                                           const DiagonalIdeal& I,
                                           std::vector<int>* kept) {
    if (!I.is_line_ideal())
        throw NonFreeQuotient(
            "quotient by a generator of positive degree has torsion");
    if (!check_ideal(L, I).passed())
        throw NotAnIdeal("diagonal submodule is not an ideal");

    const int n = L.rank();
    std::vector<int> keep;
    std::vector<int> new_index(n, -1);
    for (int i = 0; i < n; ++i)
        if (!I.gens.count(i)) {
            new_index[i] = static_cast<int>(keep.size());
            keep.push_back(i);
        }

    ConformalStructure out;
    for (int i : keep) out.basis.push_back(L.basis_names()[i]);
    for (int i : keep)
        for (int j : keep)
            for (const auto& [k, p] : L.entry(i, j))
                if (new_index[k] >= 0)
                    out.set_entry(new_index[i], new_index[j], new_index[k], p);
    if (kept) *kept = std::move(keep);
    return LieConformalAlgebra::make(std::move(out));
}

}  // namespace confal

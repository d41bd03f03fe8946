#include "confal/jordan.hpp"

#include <array>

#include "confal/duality.hpp"
#include "confal/errors.hpp"

namespace confal {

namespace {

using GenElement = std::map<int, Poly>;

/// Product with the parameter polynomial substituted in: computes u ._X v
/// with the scratch parameter x, then sets x = param. The inputs must be
/// x-free, which holds throughout the Jordan sweep (coefficients only
/// involve lam, mu, nu, d).
GenElement jprod(const ConformalStructure& s, const GenElement& u, const GenElement& v,
                 const Poly& param) {
    GenElement raw = conformal_product(s, u, v, Var::X);
    const std::map<Var, Poly> bind = {{Var::X, param}};
    GenElement out;
    for (const auto& [k, p] : raw) {
        Poly q = p.subst(bind);
        if (!q.is_zero()) out.emplace(k, std::move(q));
    }
    return out;
}

void accumulate(GenElement& acc, const GenElement& term, bool negate) {
    for (const auto& [k, p] : term) {
        Poly& slot = acc[k];
        if (negate)
            slot -= p;
        else
            slot += p;
        if (slot.is_zero()) acc.erase(k);
    }
}

/// Element of C (x) C (x) C (x) C with leg derivations x, y, z, w.
struct Tensor4 {
    std::map<std::array<int, 4>, Poly> terms;

    void add(const std::array<int, 4>& idx, const Poly& p) {
        if (p.is_zero()) return;
        Poly& slot = terms[idx];
        slot += p;
        if (slot.is_zero()) terms.erase(idx);
    }
};

/// zeta(a (x) b (x) c (x) d) = b (x) c (x) a (x) d: cycles the first three
/// index slots and the leg variables x -> z, y -> x, z -> y.
Tensor4 zeta(const Tensor4& t) {
    static const std::map<Var, Poly> cycle = {
        {Var::X, Poly::z()}, {Var::Y, Poly::x()}, {Var::Z, Poly::y()}};
    Tensor4 out;
    for (const auto& [idx, p] : t.terms)
        out.add({idx[1], idx[2], idx[0], idx[3]}, p.subst(cycle));
    return out;
}

Tensor4 cyclic_sum(const Tensor4& t) {
    Tensor4 z1 = zeta(t);
    Tensor4 z2 = zeta(z1);
    Tensor4 out = t;
    for (const auto& [idx, p] : z1.terms) out.add(idx, p);
    for (const auto& [idx, p] : z2.terms) out.add(idx, p);
    return out;
}

}  // namespace

JordanConformalAlgebra JordanConformalAlgebra::make(ConformalStructure data) {
    data.validate();
    JordanConformalAlgebra J;
    J.data_ = std::move(data);
    return J;
}

DiffJordanCoalgebra DiffJordanCoalgebra::make(CoalgebraStructure data) {
    data.validate();
    DiffJordanCoalgebra C;
    C.data_ = std::move(data);
    return C;
}

CheckReport check_jordan_commutativity(const JordanConformalAlgebra& J) {
    CheckReport report;
    const int n = J.rank();
    static const std::map<Var, Poly> flip = {{Var::Lam, -Poly::lam() - Poly::d()}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::map<int, Poly> residual;
            for (const auto& [k, p] : J.entry(i, j)) residual[k] += p;
            for (const auto& [k, p] : J.entry(j, i)) residual[k] -= p.subst(flip);
            for (const auto& [k, r] : residual)
                if (!r.is_zero()) report.add_failure({i, j, k}, r);
        }
    return report;
}

CheckReport check_jordan_identity(const JordanConformalAlgebra& J) {
    CheckReport report;
    const int n = J.rank();
    const ConformalStructure& s = J.data();
    const Poly lam = Poly::lam();
    const Poly mu = Poly::mu();
    const Poly nu = Poly::nu();
    const Poly d = Poly::d();

    for (int ia = 0; ia < n; ++ia)
        for (int ib = 0; ib < n; ++ib)
            for (int ic = 0; ic < n; ++ic)
                for (int id = 0; id < n; ++id) {
                    GenElement a = {{ia, Poly::constant(Rat(1))}};
                    GenElement b = {{ib, Poly::constant(Rat(1))}};
                    GenElement c = {{ic, Poly::constant(Rat(1))}};
                    GenElement e = {{id, Poly::constant(Rat(1))}};

                    GenElement bc = jprod(s, b, c, mu);
                    GenElement ca = jprod(s, c, a, nu - mu);
                    GenElement ab = jprod(s, a, b, -mu - d);

                    GenElement residual;
                    // a_lam((b_mu c)_nu d)
                    accumulate(residual, jprod(s, a, jprod(s, bc, e, nu), lam), false);
                    // b_mu((c_{nu-mu} a)_{lam-mu} d)
                    accumulate(residual, jprod(s, b, jprod(s, ca, e, lam - mu), mu),
                               false);
                    // c_{nu-mu}((a_{-mu-d} b)_{lam+mu} d)
                    accumulate(residual,
                               jprod(s, c, jprod(s, ab, e, lam + mu), nu - mu), false);
                    // (a_{-mu-d} b)_{lam+mu}(c_{nu-mu} d)
                    accumulate(residual,
                               jprod(s, ab, jprod(s, c, e, nu - mu), lam + mu), true);
                    // (b_mu c)_nu(a_lam d)
                    accumulate(residual, jprod(s, bc, jprod(s, a, e, lam), nu), true);
                    // (c_{nu-mu} a)_{lam+nu-mu}(b_mu d)
                    accumulate(residual,
                               jprod(s, ca, jprod(s, b, e, mu), lam + nu - mu), true);

                    for (const auto& [l, r] : residual)
                        report.add_failure({ia, ib, ic, id, l}, r);
                }
    return report;
}

namespace {

Tensor4 delta_delta_delta(const CoalgebraStructure& C, int k) {
    static const std::map<Var, Poly> outer_split = {{Var::X, Poly::x() + Poly::y()},
                                                    {Var::Y, Poly::z() + Poly::w()}};
    static const std::map<Var, Poly> right_legs = {{Var::X, Poly::z()},
                                                   {Var::Y, Poly::w()}};
    Tensor4 out;
    auto it = C.table.find(k);
    if (it == C.table.end()) return out;
    for (const auto& [ab, q] : it->second) {
        Poly outer = q.subst(outer_split);
        for (const auto& [pq, left] : C.entry(ab.first)) {
            Poly partial = outer * left;
            for (const auto& [rs, right] : C.entry(ab.second))
                out.add({pq.first, pq.second, rs.first, rs.second},
                        partial * right.subst(right_legs));
        }
    }
    return out;
}

Tensor4 middle_expansion(const CoalgebraStructure& C, int k) {
    static const std::map<Var, Poly> outer_split = {
        {Var::Y, Poly::y() + Poly::z() + Poly::w()}};
    static const std::map<Var, Poly> mid_split = {{Var::X, Poly::y() + Poly::z()},
                                                  {Var::Y, Poly::w()}};
    static const std::map<Var, Poly> inner_legs = {{Var::X, Poly::y()},
                                                   {Var::Y, Poly::z()}};
    Tensor4 out;
    auto it = C.table.find(k);
    if (it == C.table.end()) return out;
    for (const auto& [ab, q] : it->second) {
        Poly outer = q.subst(outer_split);
        for (const auto& [ge, mid] : C.entry(ab.second)) {
            Poly partial = outer * mid.subst(mid_split);
            for (const auto& [rs, inner] : C.entry(ge.first))
                out.add({ab.first, rs.first, rs.second, ge.second},
                        partial * inner.subst(inner_legs));
        }
    }
    return out;
}

}  // namespace

CheckReport check_cojordan(const DiffJordanCoalgebra& C) {
    CheckReport report;
    const int n = C.rank();
    static const std::map<Var, Poly> swap_xy = {{Var::X, Poly::y()},
                                                {Var::Y, Poly::x()}};
    // Cocommutativity: Q^{ij}_k(x,y) = Q^{ji}_k(y,x).
    for (int k = 0; k < n; ++k) {
        std::map<std::pair<int, int>, Poly> residual;
        for (const auto& [ij, q] : C.entry(k)) {
            residual[ij] += q;
            residual[{ij.second, ij.first}] -= q.subst(swap_xy);
        }
        for (const auto& [ij, r] : residual)
            if (!r.is_zero())
                report.add_failure({ij.first, ij.second, k}, r, "cocommutativity");
    }
    // Co-Jordan on four legs.
    for (int k = 0; k < n; ++k) {
        Tensor4 lhs = cyclic_sum(delta_delta_delta(C.data(), k));
        Tensor4 rhs = cyclic_sum(middle_expansion(C.data(), k));
        for (const auto& [idx, p] : rhs.terms) lhs.add(idx, -p);
        for (const auto& [idx, r] : lhs.terms)
            report.add_failure({idx[0], idx[1], idx[2], idx[3], k}, r, "co-Jordan");
    }
    return report;
}

DiffJordanCoalgebra dualize_jordan(const JordanConformalAlgebra& J) {
    static const std::map<Var, Poly> to_legs = {{Var::Lam, Poly::x()},
                                                {Var::D, -Poly::x() - Poly::y()}};
    CoalgebraStructure out;
    for (const auto& name : J.basis_names()) out.basis.push_back(toggle_star(name));
    for (const auto& [ij, terms] : J.data().table)
        for (const auto& [k, P] : terms)
            out.set_entry(k, ij.first, ij.second, P.subst(to_legs));
    return DiffJordanCoalgebra::make(std::move(out));
}

JordanConformalAlgebra dualize_jordan_coalgebra(const DiffJordanCoalgebra& C) {
    static const std::map<Var, Poly> to_bracket = {{Var::X, Poly::lam()},
                                                   {Var::Y, -Poly::lam() - Poly::d()}};
    ConformalStructure out;
    for (const auto& name : C.basis_names()) out.basis.push_back(toggle_star(name));
    for (const auto& [k, terms] : C.data().table)
        for (const auto& [ij, Q] : terms)
            out.set_entry(ij.first, ij.second, k, Q.subst(to_bracket));
    return JordanConformalAlgebra::make(std::move(out));
}

JordanConformalAlgebra jordan_current(
    std::vector<std::string> basis,
    std::map<std::pair<int, int>, std::map<int, Rat>> products) {
    ConformalStructure s;
    s.basis = std::move(basis);
    for (const auto& [ij, terms] : products)
        for (const auto& [k, c] : terms) s.set_entry(ij.first, ij.second, k, Poly::constant(c));
    auto J = JordanConformalAlgebra::make(std::move(s));
    if (!check_jordan_commutativity(J).passed())
        throw InvalidArgument("jordan_current requires a symmetric product table");
    return J;
}

JordanConformalAlgebra jordan_dual_numbers() {
    std::map<std::pair<int, int>, std::map<int, Rat>> p;
    p[{0, 0}][0] = Rat(1);
    p[{0, 1}][1] = Rat(1);
    p[{1, 0}][1] = Rat(1);
    return jordan_current({"u", "t"}, std::move(p));
}

JordanConformalAlgebra jordan_truncated3() {
    std::map<std::pair<int, int>, std::map<int, Rat>> p;
    // basis 1, t, t^2 in Q[t]/(t^3)
    p[{0, 0}][0] = Rat(1);
    p[{0, 1}][1] = Rat(1);
    p[{1, 0}][1] = Rat(1);
    p[{0, 2}][2] = Rat(1);
    p[{2, 0}][2] = Rat(1);
    p[{1, 1}][2] = Rat(1);
    return jordan_current({"u", "t", "t2"}, std::move(p));
}

JordanConformalAlgebra jordan_sym2() {
    // basis E11, E22, S = E12 + E21 under the symmetrized matrix product.
    std::map<std::pair<int, int>, std::map<int, Rat>> p;
    p[{0, 0}][0] = Rat(1);
    p[{1, 1}][1] = Rat(1);
    p[{0, 2}][2] = Rat(1, 2);
    p[{2, 0}][2] = Rat(1, 2);
    p[{1, 2}][2] = Rat(1, 2);
    p[{2, 1}][2] = Rat(1, 2);
    p[{2, 2}][0] = Rat(1);
    p[{2, 2}][1] = Rat(1);
    return jordan_current({"E11", "E22", "S"}, std::move(p));
}

}  // namespace confal

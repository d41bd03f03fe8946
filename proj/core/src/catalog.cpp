#include "confal/catalog.hpp"

#include "confal/errors.hpp"

namespace confal {

namespace {

const std::map<int, Rat> kEmptyBracket;

ConformalStructure constant_structure(
    const std::vector<std::string>& basis,
    const std::map<std::pair<int, int>, std::map<int, Rat>>& brackets) {
    ConformalStructure s;
    s.basis = basis;
    for (const auto& [ij, terms] : brackets)
        for (const auto& [k, c] : terms)
            s.set_entry(ij.first, ij.second, k, Poly::constant(c));
    return s;
}

}  // namespace

LieAlgebraSC LieAlgebraSC::make(
    std::vector<std::string> basis,
    std::map<std::pair<int, int>, std::map<int, Rat>> brackets) {
    for (auto& [ij, terms] : brackets)
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    for (auto it = brackets.begin(); it != brackets.end();)
        it = it->second.empty() ? brackets.erase(it) : std::next(it);

    LieAlgebraSC g;
    g.basis = std::move(basis);
    g.brackets = std::move(brackets);
    // Constant structure polynomials: the conformal axiom sweeps reduce to
    // classical antisymmetry and Jacobi.
    auto conformal = LieConformalAlgebra::make(constant_structure(g.basis, g.brackets));
    if (!check_skew(conformal).passed())
        throw InvalidArgument("structure constants are not antisymmetric");
    if (!check_jacobi(conformal).passed())
        throw InvalidArgument("structure constants violate the Jacobi identity");
    return g;
}

const std::map<int, Rat>& LieAlgebraSC::entry(int i, int j) const {
    auto it = brackets.find({i, j});
    return it == brackets.end() ? kEmptyBracket : it->second;
}

LieCoalgebraSC LieCoalgebraSC::make(
    std::vector<std::string> basis,
    std::map<int, std::map<std::pair<int, int>, Rat>> cobrackets) {
    LieCoalgebraSC c;
    c.basis = std::move(basis);
    c.cobrackets = std::move(cobrackets);
    CoalgebraStructure s;
    s.basis = c.basis;
    for (const auto& [k, terms] : c.cobrackets)
        for (const auto& [ij, coeff] : terms)
            s.set_entry(k, ij.first, ij.second, Poly::constant(coeff));
    auto coalgebra = DiffLieCoalgebra::make(std::move(s));
    if (!check_coskew(coalgebra).passed())
        throw InvalidArgument("cobracket is not co-antisymmetric");
    if (!check_cojacobi(coalgebra).passed())
        throw InvalidArgument("cobracket violates the co-Jacobi identity");
    return c;
}

LieConformalAlgebra current_algebra(const LieAlgebraSC& g) {
    return LieConformalAlgebra::make(constant_structure(g.basis, g.brackets));
}

DiffLieCoalgebra current_coalgebra(const LieCoalgebraSC& c) {
    CoalgebraStructure s;
    for (const auto& name : c.basis) s.basis.push_back(toggle_star(name));
    for (const auto& [k, terms] : c.cobrackets)
        for (const auto& [ij, coeff] : terms)
            s.set_entry(k, ij.first, ij.second, Poly::constant(coeff));
    return DiffLieCoalgebra::make(std::move(s));
}

LieCoalgebraSC dual_cobracket(const LieAlgebraSC& g) {
    std::map<int, std::map<std::pair<int, int>, Rat>> cobrackets;
    for (const auto& [ij, terms] : g.brackets)
        for (const auto& [k, c] : terms) cobrackets[k][{ij.first, ij.second}] = c;
    return LieCoalgebraSC::make(g.basis, std::move(cobrackets));
}

ConformalFunctional theta_embed(const Element& f, int dim_v) {
    static const std::map<Var, Poly> d_to_neg_lam = {{Var::D, -Poly::lam()}};
    ConformalFunctional out;
    out.ambient_rank = dim_v;
    for (const auto& [i, p] : f.coeffs) {
        if (i < 0 || i >= dim_v) throw IndexOutOfRank("theta input index out of rank");
        if (!p.uses_only(kVarsD))
            throw InvalidArgument("theta input coefficients must lie in C[d]");
        out.coords.emplace(i, p.subst(d_to_neg_lam));
    }
    return out;
}

CheckReport verify_theta_goodness(
    const LieAlgebraSC& g,
    const std::map<int, std::map<std::pair<int, int>, Rat>>& cobracket, int window_k,
    const std::set<int>& boundary) {
    if (window_k < 0) throw WindowTooSmall("theta window must be non-negative");
    CheckReport report;
    LieConformalAlgebra cur = current_algebra(g);
    const int d = g.dim();

    std::vector<ConformalFunctional> legs;
    for (int j = 0; j < d; ++j)
        legs.push_back(theta_embed(Element::basis(j), d));

    const Poly leg_sum = Poly::x() + Poly::y();
    for (int k = 0; k <= window_k; ++k) {
        Poly spread = leg_sum.pow(static_cast<unsigned>(k));
        for (int j = 0; j < d; ++j) {
            if (boundary.count(j)) {
                report.mark_window_too_small(
                    {k, j}, "cobracket not available at this truncation");
                continue;
            }
            ConformalFunctional f =
                theta_embed(Element::single(j, Poly::d().pow(static_cast<unsigned>(k))), d);
            Tensor2 delta;
            auto it = cobracket.find(j);
            if (it != cobracket.end())
                for (const auto& [pq, c] : it->second)
                    delta.add(pq.first, pq.second, spread * Poly::constant(c));
            check_goodness_identity(cur, f, delta, legs, k * d + j, report);
        }
    }
    return report;
}

MichaelisData michaelis(int top_index) {
    if (top_index < 2) throw InvalidArgument("michaelis needs top index >= 2");
    const int n = top_index + 1;
    std::vector<std::string> basis;
    for (int i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i));

    std::map<std::pair<int, int>, std::map<int, Rat>> brackets;
    for (int k = 2; k <= top_index; ++k) {
        brackets[{0, k}][k - 1] = Rat(1);
        brackets[{k, 0}][k - 1] = Rat(-1);
    }

    MichaelisData m;
    m.top_index = top_index;
    m.lie = LieAlgebraSC::make(std::move(basis), std::move(brackets));
    m.conformal = current_algebra(m.lie);
    // delta(e_i^*) = e_0^* (x) e_{i+1}^* - e_{i+1}^* (x) e_0^* needs index
    // i+1, so the window covers i < N; delta(e_0^*) = 0.
    m.coalgebra_window[0] = {};
    for (int i = 1; i < top_index; ++i) {
        m.coalgebra_window[i][{0, i + 1}] = Rat(1);
        m.coalgebra_window[i][{i + 1, 0}] = Rat(-1);
    }
    return m;
}

DiagonalIdeal MichaelisData::ideal(const Poly& a) const {
    if (!a.uses_only(kVarsD))
        throw InvalidArgument("ideal generator must be a polynomial in d");
    DiagonalIdeal I;
    if (!a.is_zero()) I.gens[0] = a;
    for (int i = 1; i <= top_index; ++i) I.gens[i] = Poly::constant(Rat(1));
    return I;
}

GoodnessCandidate michaelis_window_candidate(const MichaelisData& m) {
    const int n = m.top_index + 1;
    GoodnessCandidate cand;
    std::vector<ConformalFunctional> basis;
    for (int i = 0; i < n; ++i) basis.push_back(ConformalFunctional::dual_basis(i, n));
    for (auto& f : basis) f.truncated = true;
    cand.basis = SubspaceBasis::make(std::move(basis));
    for (const auto& [i, terms] : m.coalgebra_window) {
        Tensor2 t;
        for (const auto& [pq, c] : terms) t.add(pq.first, pq.second, Poly::constant(c));
        cand.delta.emplace(i, std::move(t));
    }
    return cand;
}

LieConformalAlgebra witt_truncated(int top_index) {
    if (top_index < 0) throw InvalidArgument("witt truncation needs top index >= 0");
    ConformalStructure s;
    for (int i = 0; i <= top_index; ++i) s.basis.push_back("L" + std::to_string(i));
    Poly bracket = Poly::constant(Rat(2)) * Poly::lam() + Poly::d();
    for (int i = 0; i <= top_index; ++i)
        for (int j = 0; i + j <= top_index; ++j) s.set_entry(i, j, i + j, bracket);
    return LieConformalAlgebra::make(std::move(s));
}

LieConformalAlgebra virasoro() {
    ConformalStructure s;
    s.basis = {"L"};
    s.set_entry(0, 0, 0, Poly::constant(Rat(2)) * Poly::lam() + Poly::d());
    return LieConformalAlgebra::make(std::move(s));
}

LieAlgebraSC sl2() {
    // basis e, h, f with [e, f] = h, [h, e] = 2e, [h, f] = -2f.
    std::map<std::pair<int, int>, std::map<int, Rat>> b;
    b[{0, 2}][1] = Rat(1);
    b[{2, 0}][1] = Rat(-1);
    b[{1, 0}][0] = Rat(2);
    b[{0, 1}][0] = Rat(-2);
    b[{1, 2}][2] = Rat(-2);
    b[{2, 1}][2] = Rat(2);
    return LieAlgebraSC::make({"e", "h", "f"}, std::move(b));
}

LieAlgebraSC heisenberg3() {
    // [p, q] = z, z central.
    std::map<std::pair<int, int>, std::map<int, Rat>> b;
    b[{0, 1}][2] = Rat(1);
    b[{1, 0}][2] = Rat(-1);
    return LieAlgebraSC::make({"p", "q", "z"}, std::move(b));
}

LieAlgebraSC nonabelian2() {
    std::map<std::pair<int, int>, std::map<int, Rat>> b;
    b[{0, 1}][0] = Rat(1);
    b[{1, 0}][0] = Rat(-1);
    return LieAlgebraSC::make({"x", "y"}, std::move(b));
}

}  // namespace confal

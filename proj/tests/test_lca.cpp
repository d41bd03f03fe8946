#include <doctest.h>

#include <random>

#include "confal/catalog.hpp"
#include "confal/errors.hpp"
#include "confal/lca.hpp"
#include "helpers.hpp"

using namespace confal;
using confal::testing::P;
using confal::testing::random_poly;

namespace {

LieConformalAlgebra rank1(const Poly& p) {
    ConformalStructure s;
    s.basis = {"a"};
    s.set_entry(0, 0, 0, p);
    return LieConformalAlgebra::make(std::move(s));
}

LieConformalAlgebra abelian(int n) {
    ConformalStructure s;
    for (int i = 0; i < n; ++i) s.basis.push_back("a" + std::to_string(i));
    return LieConformalAlgebra::make(std::move(s));
}

}  // namespace

TEST_CASE("lambda bracket on the Virasoro algebra") {
    auto vir = virasoro();
    auto br = lambda_bracket(vir, Element::basis(0), Element::basis(0));
    CHECK(br.coeffs == std::map<int, Poly>{{0, P("2*lam+d")}});

    // Sesquilinearity factor p(-lam) for p(d) = d.
    auto left = lambda_bracket(vir, Element::single(0, Poly::d()), Element::basis(0));
    CHECK(left.coeffs == std::map<int, Poly>{{0, P("-lam") * P("2*lam+d")}});

    CHECK(lambda_bracket(vir, Element::basis(0), Element{}).is_zero());
    CHECK_THROWS_AS(lambda_bracket(vir, Element::basis(1), Element::basis(0)),
                    IndexOutOfRank);
}

TEST_CASE("skew-symmetry check") {
    CHECK(check_skew(virasoro()).passed());

    auto bad = rank1(P("lam"));
    auto report = check_skew(bad);
    REQUIRE_FALSE(report.passed());
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses[0].indices == std::vector<int>{0, 0, 0});
    CHECK(report.witnesses[0].residual == P("-d"));

    CHECK(check_skew(abelian(3)).passed());
}

TEST_CASE("Jacobi identity check") {
    CHECK(check_jacobi(virasoro()).passed());
    CHECK(check_jacobi(current_algebra(sl2())).passed());

    // a_lam a = b, b_lam b = a, a_lam b = 0: the middle Jacobi term of the
    // triple (a, a, b) is [b_{lam+mu} b] = a, everything else vanishes.
    ConformalStructure s;
    s.basis = {"a", "b"};
    s.set_entry(0, 0, 1, Poly::constant(Rat(1)));
    s.set_entry(1, 1, 0, Poly::constant(Rat(1)));
    auto bad = LieConformalAlgebra::make(std::move(s));
    auto report = check_jacobi(bad);
    REQUIRE_FALSE(report.passed());
    bool found = false;
    for (const auto& w : report.witnesses)
        if (w.indices == std::vector<int>{0, 0, 1, 0}) {
            found = true;
            CHECK(w.residual == P("-1"));
        }
    CHECK(found);
}

TEST_CASE("brute-force Jacobi expansion agrees with the closed form") {
    // Oracle: expand [a_lam [b_mu c]] - [[a_lam b]_{lam+mu} c]
    //               - [b_mu [a_lam c]] through nested sesquilinear products.
    auto jacobi_oracle = [](const LieConformalAlgebra& L) {
        const int n = L.rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    std::map<int, Poly> unit_i = {{i, Poly::constant(Rat(1))}};
                    std::map<int, Poly> unit_j = {{j, Poly::constant(Rat(1))}};
                    std::map<int, Poly> unit_k = {{k, Poly::constant(Rat(1))}};
                    auto t1 = conformal_product(
                        L.data(), unit_i,
                        conformal_product(L.data(), unit_j, unit_k, Var::Mu),
                        Var::Lam);
                    auto t3 = conformal_product(
                        L.data(), unit_j,
                        conformal_product(L.data(), unit_i, unit_k, Var::Lam),
                        Var::Mu);
                    // inner bracket with scratch parameter nu, outer with x,
                    // then nu -> lam, x -> lam + mu.
                    auto inner = conformal_product(L.data(), unit_i, unit_j, Var::Nu);
                    auto outer = conformal_product(L.data(), inner, unit_k, Var::X);
                    std::map<Var, Poly> close = {{Var::Nu, Poly::lam()},
                                                 {Var::X, Poly::lam() + Poly::mu()}};
                    std::map<int, Poly> residual;
                    for (const auto& [l, p] : t1) residual[l] += p;
                    for (const auto& [l, p] : outer) residual[l] -= p.subst(close);
                    for (const auto& [l, p] : t3) residual[l] -= p;
                    for (const auto& [l, p] : residual)
                        if (!p.is_zero()) return false;
                }
        return true;
    };

    std::mt19937 rng(23);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        auto s = confal::testing::random_structure(rng, 2, 1);
        auto L = LieConformalAlgebra::make(std::move(s));
        CHECK(check_jacobi(L).passed() == jacobi_oracle(L));
        ++checked;
    }
    CHECK(checked == 40);
    CHECK(jacobi_oracle(virasoro()));
    CHECK(jacobi_oracle(witt_truncated(3)));
}

TEST_CASE("bracket is sesquilinear in both slots") {
    std::mt19937 rng(31);
    for (const auto& L : {virasoro(), current_algebra(sl2()), witt_truncated(4)}) {
        for (int t = 0; t < 10; ++t) {
            int i = static_cast<int>(rng() % L.rank());
            int j = static_cast<int>(rng() % L.rank());
            Poly p = random_poly(rng, {Var::D}, 3, 2);
            Poly q = random_poly(rng, {Var::D}, 3, 2);
            auto base = lambda_bracket(L, Element::basis(i), Element::basis(j));

            auto left = lambda_bracket(L, Element::single(i, p), Element::basis(j));
            Poly p_neg = p.subst({{Var::D, P("-lam")}});
            for (const auto& [k, c] : base.coeffs) {
                auto it = left.coeffs.find(k);
                Poly got = it == left.coeffs.end() ? Poly::zero() : it->second;
                CHECK(got == p_neg * c);
            }

            auto right = lambda_bracket(L, Element::basis(i), Element::single(j, q));
            Poly q_shift = q.subst({{Var::D, P("lam+d")}});
            for (const auto& [k, c] : base.coeffs) {
                auto it = right.coeffs.find(k);
                Poly got = it == right.coeffs.end() ? Poly::zero() : it->second;
                CHECK(got == q_shift * c);
            }
        }
    }
}

TEST_CASE("base change") {
    auto vir = virasoro();

    SUBCASE("identity matrix is a no-op") {
        CHECK(base_change(vir, PolyMatrix::identity(1)) == vir);
    }

    SUBCASE("sign flip negates the structure polynomial") {
        PolyMatrix c(1, 1);
        c.at(0, 0) = P("-1");
        auto flipped = base_change(vir, c);
        CHECK(flipped.entry(0, 0).at(0) == P("-2*lam-d"));
    }

    SUBCASE("abelian stays abelian under shear") {
        PolyMatrix c(2, 2);
        c.at(0, 0) = P("1");
        c.at(0, 1) = P("d");
        c.at(1, 1) = P("1");
        auto sheared = base_change(abelian(2), c);
        CHECK(sheared.data().table.empty());
    }

    SUBCASE("non-unimodular matrices are rejected") {
        PolyMatrix c(1, 1);
        c.at(0, 0) = P("d");
        CHECK_THROWS_AS(base_change(vir, c), NotUnimodular);
    }

    SUBCASE("axiom checks are invariant under unimodular base change") {
        std::mt19937 rng(41);
        auto witt = witt_truncated(2);
        for (int t = 0; t < 5; ++t) {
            PolyMatrix c = PolyMatrix::identity(3);
            // Product of elementary shears keeps the determinant 1.
            for (int e = 0; e < 3; ++e) {
                PolyMatrix shear = PolyMatrix::identity(3);
                int i = static_cast<int>(rng() % 3);
                int j = static_cast<int>(rng() % 3);
                if (i != j) shear.at(i, j) = random_poly(rng, {Var::D}, 2, 1);
                c = c * shear;
            }
            auto changed = base_change(witt, c);
            CHECK(check_skew(changed).passed());
            CHECK(check_jacobi(changed).passed());
        }
    }
}

TEST_CASE("diagonal ideal membership") {
    auto m = michaelis(6);

    SUBCASE("J_a with a(d) = d is an ideal") {
        CHECK(check_ideal(m.conformal, m.ideal(Poly::d())).passed());
    }

    SUBCASE("the line through e_0 alone is not an ideal") {
        DiagonalIdeal I = DiagonalIdeal::lines({0});
        auto report = check_ideal(m.conformal, I);
        CHECK_FALSE(report.passed());
    }

    SUBCASE("the whole algebra is an ideal") {
        std::vector<int> all;
        for (int i = 0; i <= 6; ++i) all.push_back(i);
        CHECK(check_ideal(m.conformal, DiagonalIdeal::lines(all)).passed());
    }
}

TEST_CASE("quotient by a line ideal") {
    SUBCASE("witt grading quotient") {
        std::vector<int> kept;
        auto q = quotient_by_line_ideal(witt_truncated(6),
                                        DiagonalIdeal::lines({4, 5, 6}), &kept);
        CHECK(q == witt_truncated(3));
        CHECK(kept == std::vector<int>{0, 1, 2, 3});
    }

    SUBCASE("michaelis modulo J_0 is a rank-1 abelian algebra") {
        auto m = michaelis(4);
        auto q = quotient_by_line_ideal(m.conformal, m.ideal(Poly::zero()));
        CHECK(q.rank() == 1);
        CHECK(q.basis_names() == std::vector<std::string>{"e0"});
        CHECK(q.data().table.empty());
    }

    SUBCASE("quotient by the zero ideal is the identity") {
        auto vir = virasoro();
        CHECK(quotient_by_line_ideal(vir, DiagonalIdeal{}) == vir);
    }

    SUBCASE("positive-degree generators are rejected") {
        auto m = michaelis(4);
        CHECK_THROWS_AS(quotient_by_line_ideal(m.conformal, m.ideal(Poly::d())),
                        NonFreeQuotient);
    }

    SUBCASE("non-ideals are rejected") {
        auto m = michaelis(4);
        CHECK_THROWS_AS(
            quotient_by_line_ideal(m.conformal, DiagonalIdeal::lines({0})),
            NotAnIdeal);
    }

    SUBCASE("quotients of axiom-passing algebras pass the axioms") {
        auto m = michaelis(5);
        auto q = quotient_by_line_ideal(m.conformal, m.ideal(Poly::zero()));
        CHECK(check_skew(q).passed());
        CHECK(check_jacobi(q).passed());
        auto w = quotient_by_line_ideal(witt_truncated(5),
                                        DiagonalIdeal::lines({3, 4, 5}));
        CHECK(check_skew(w).passed());
        CHECK(check_jacobi(w).passed());
    }
}

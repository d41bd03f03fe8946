#include <doctest.h>

#include "confal/catalog.hpp"
#include "confal/errors.hpp"
#include "helpers.hpp"

using namespace confal;
using confal::testing::P;

TEST_CASE("structure-constant constructors validate the axioms") {
    CHECK_NOTHROW(sl2());
    CHECK_NOTHROW(heisenberg3());
    CHECK_NOTHROW(nonabelian2());

    // Non-antisymmetric table is rejected.
    std::map<std::pair<int, int>, std::map<int, Rat>> bad;
    bad[{0, 1}][0] = Rat(1);
    CHECK_THROWS_AS(LieAlgebraSC::make({"x", "y"}, bad), InvalidArgument);

    // Antisymmetric but Jacobi-violating: [x,y]=x, [y,z]=y, [x,z]=0 leaves
    // [x,[y,z]] = x uncancelled on the triple (x,y,z).
    std::map<std::pair<int, int>, std::map<int, Rat>> nj;
    nj[{0, 1}][0] = Rat(1);
    nj[{1, 0}][0] = Rat(-1);
    nj[{1, 2}][1] = Rat(1);
    nj[{2, 1}][1] = Rat(-1);
    CHECK_THROWS_AS(LieAlgebraSC::make({"x", "y", "z"}, nj), InvalidArgument);
}

TEST_CASE("current algebras have constant structure") {
    auto cur = current_algebra(sl2());
    CHECK(cur.rank() == 3);
    CHECK(cur.entry(0, 2).at(1) == P("1"));   // [e, f] = h
    CHECK(cur.entry(1, 0).at(0) == P("2"));   // [h, e] = 2e
    CHECK(cur.entry(1, 2).at(2) == P("-2"));  // [h, f] = -2f
    CHECK(check_skew(cur).passed());
    CHECK(check_jacobi(cur).passed());

    auto ab = current_algebra(LieAlgebraSC::make({"x", "y"}, {}));
    CHECK(ab.data().table.empty());

    auto na = current_algebra(nonabelian2());
    CHECK(na.entry(0, 1).at(0) == P("1"));
    CHECK(na.entry(1, 0).at(0) == P("-1"));
}

TEST_CASE("current coalgebras and the dual cobracket") {
    auto dual = dual_cobracket(nonabelian2());
    auto cc = current_coalgebra(dual);
    // delta(x^*) = x^* (x) y^* - y^* (x) x^*, delta(y^*) = 0.
    CHECK(cc.entry(0) == std::map<std::pair<int, int>, Poly>{{{0, 1}, P("1")},
                                                             {{1, 0}, P("-1")}});
    CHECK(cc.entry(1).empty());

    CHECK(current_coalgebra(LieCoalgebraSC::make({"c"}, {})).data().table.empty());

    // Dualization intertwines the current constructions.
    for (const auto& g : {sl2(), heisenberg3(), nonabelian2(), michaelis(5).lie})
        CHECK(dualize_algebra(current_algebra(g)) ==
              current_coalgebra(dual_cobracket(g)));
}

TEST_CASE("theta embedding") {
    const int dim = 2;
    // Theta(d^2 (x) phi_0) on p(d) v_0 gives lam^2 p(lam) phi(v).
    auto f = theta_embed(Element::single(0, Poly::d().pow(2)), dim);
    CHECK(evaluate_functional(f, Element::single(0, P("d+1"))) ==
          P("lam^2") * P("lam+1"));
    // k = 0, p = 1.
    CHECK(evaluate_functional(theta_embed(Element::basis(1), dim),
                              Element::basis(1)) == P("1"));
    // the (-lam)^k factor
    CHECK(evaluate_functional(theta_embed(Element::single(0, Poly::d()), dim),
                              Element::basis(0)) == P("-lam"));
    // injectivity: nonzero input, nonzero coords
    CHECK_FALSE(theta_embed(Element::single(1, P("d^3-2")), dim).is_zero());
}

TEST_CASE("theta goodness windows") {
    CHECK(verify_theta_goodness(sl2(), dual_cobracket(sl2()).cobrackets, 3).passed());
    CHECK(verify_theta_goodness(nonabelian2(), dual_cobracket(nonabelian2()).cobrackets, 4)
              .passed());
    auto abelian = LieAlgebraSC::make({"x", "y"}, {});
    CHECK(verify_theta_goodness(abelian, {}, 2).passed());
}

TEST_CASE("michaelis family") {
    auto m = michaelis(4);
    CHECK(m.conformal.rank() == 5);
    CHECK(m.lie.entry(0, 3).at(2) == Rat(1));   // [e_0, e_3] = e_2
    CHECK(m.lie.entry(1, 3).empty());           // [e_1, e_3] = 0
    CHECK(m.lie.entry(3, 0).at(2) == Rat(-1));  // antisymmetry

    // e_2^*([e_0, e_3]) = 1 matches the coproduct pairing
    // sum (e_2^*)_(1)(e_0) (e_2^*)_(2)(e_3) = 1 from the window.
    auto e2s = ConformalFunctional::dual_basis(2, 5);
    auto bracket = lambda_bracket(m.conformal, Element::basis(0), Element::basis(3));
    Poly lhs = evaluate_functional(e2s, bracket.coeffs);
    CHECK(lhs == P("1"));
    Rat rhs(0);
    for (const auto& [pq, c] : m.coalgebra_window.at(2)) {
        Rat left = pq.first == 0 ? Rat(1) : Rat(0);
        Rat right = pq.second == 3 ? Rat(1) : Rat(0);
        rhs += c * left * right;
    }
    CHECK(rhs == Rat(1));

    // J_a are ideals for several generators a(d).
    auto m6 = michaelis(6);
    for (const Poly& a : {Poly::zero(), P("d"), P("d^2+1"), P("1")})
        CHECK(check_ideal(m6.conformal, m6.ideal(a)).passed());

    CHECK_THROWS_AS(michaelis(1), InvalidArgument);
}

TEST_CASE("michaelis coalgebra window reports the truncation boundary") {
    auto m = michaelis(6);
    auto report = verify_goodness(m.conformal, michaelis_window_candidate(m));
    CHECK(report.verdict == Verdict::WindowTooSmall);
    // The only window marker is the boundary functional e_N^*.
    for (const auto& w : report.witnesses) {
        CHECK(w.residual.is_zero());
        CHECK(w.indices == std::vector<int>{6});
    }
}

TEST_CASE("witt truncations") {
    auto w0 = witt_truncated(0);
    CHECK(w0.rank() == 1);
    CHECK(w0.entry(0, 0).at(0) == P("2*lam+d"));
    CHECK(w0.data().table == virasoro().data().table);

    auto w3 = witt_truncated(3);
    CHECK(w3.entry(2, 2).empty());  // grade 4 truncated
    CHECK(w3.entry(1, 2).at(3) == P("2*lam+d"));
    CHECK(check_skew(w3).passed());
    CHECK(check_jacobi(w3).passed());

    auto dual2 = dualize_algebra(witt_truncated(2));
    CHECK(dual2.entry(2) ==
          std::map<std::pair<int, int>, Poly>{
              {{0, 2}, P("x-y")}, {{1, 1}, P("x-y")}, {{2, 0}, P("x-y")}});
}

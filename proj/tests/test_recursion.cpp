#include <doctest.h>

#include <random>

#include "confal/errors.hpp"
#include "confal/recursion.hpp"
#include "helpers.hpp"

using namespace confal;
using confal::testing::P;

namespace {

SeqFunctional window_of(std::vector<const char*> entries) {
    std::vector<Poly> w;
    for (const char* e : entries) w.push_back(Poly::parse(e));
    return SeqFunctional::make(std::move(w));
}

SeqFunctional fibonacci_window(int len) {
    std::vector<Poly> w = {Poly::constant(Rat(0)), Poly::constant(Rat(1))};
    for (int i = 2; i < len; ++i)
        w.push_back(w[i - 1] + w[i - 2]);
    return SeqFunctional::make(std::move(w));
}

}  // namespace

TEST_CASE("f_am windows") {
    auto ones = f_am(Rat(1), 0, 5);
    for (const auto& p : ones.window) CHECK(p == P("1"));

    CHECK(f_am(Rat(2), 1, 4).window[3] == P("24"));  // 2^3 * 3

    auto squares = f_am(Rat(1), 2, 3);
    CHECK(squares.window[0] == P("0"));
    CHECK(squares.window[1] == P("1"));
    CHECK(squares.window[2] == P("4"));
    CHECK(squares.window[3] == P("9"));

    CHECK(f_am(Rat(3), 0, 0).window[0] == P("1"));  // 0^0 = 1
    CHECK_THROWS_AS(f_am(Rat(0), 1, 3), InvalidArgument);
}

TEST_CASE("delta of f_am") {
    auto m0 = delta_f_am(Rat(2), 0);
    CHECK(m0.terms == std::map<std::pair<int, int>, Poly>{{{0, 0}, P("x-y")}});

    auto m1 = delta_f_am(Rat(2), 1);
    CHECK(m1.terms == std::map<std::pair<int, int>, Poly>{{{0, 1}, P("x-y")},
                                                          {{1, 0}, P("x-y")}});

    // binomial row for m = 4: 1 4 6 4 1
    auto m4 = delta_f_am(Rat(1), 4);
    CHECK(m4.terms.at({1, 3}) == P("4*x-4*y"));
    CHECK(m4.terms.at({2, 2}) == P("6*x-6*y"));

    // co-skew: the swapped tensor is the negative (j <-> m - j).
    for (int m = 0; m <= 6; ++m) {
        auto t = delta_f_am(Rat(1, 2), m);
        CHECK(t.swapped_legs() == -t);
    }
}

TEST_CASE("f_am pairing identity") {
    CHECK(verify_fam_pairing(Rat(2), 1, 3).passed());
    CHECK(verify_fam_pairing(Rat(1), 0, 3).passed());
    CHECK(verify_fam_pairing(Rat(1, 2), 4, 4).passed());
    CHECK(verify_fam_pairing(Rat(-1), 2, 4).passed());
    CHECK_THROWS_AS(verify_fam_pairing(Rat(0), 1, 3), InvalidArgument);
}

TEST_CASE("recursion detection on the worked sequences") {
    SUBCASE("geometric 3^i") {
        std::vector<Poly> w;
        for (int i = 0; i <= 8; ++i) w.push_back(Poly::constant(Rat(3).pow(i)));
        auto cert = detect_recursion(SeqFunctional::make(w), 3);
        REQUIRE(cert.has_value());
        CHECK(cert->betas == std::vector<Rat>{Rat(-3), Rat(1)});
        CHECK(cert->offset == 0);
    }

    SUBCASE("linear sequence i needs the second difference") {
        std::vector<Poly> w;
        for (int i = 0; i <= 8; ++i) w.push_back(Poly::constant(Rat(i)));
        auto cert = detect_recursion(SeqFunctional::make(w), 3);
        REQUIRE(cert.has_value());
        CHECK(cert->betas == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
        CHECK(cert->offset == 0);
    }

    SUBCASE("fibonacci") {
        auto cert = detect_recursion(fibonacci_window(12), 4);
        REQUIRE(cert.has_value());
        CHECK(cert->betas == std::vector<Rat>{Rat(-1), Rat(-1), Rat(1)});
        CHECK(cert->offset == 0);
    }

    SUBCASE("window too small") {
        CHECK_THROWS_AS(detect_recursion(window_of({"1", "2"}), 3), WindowTooSmall);
    }

    SUBCASE("no recursion within the order bound") {
        // factorial growth has no fixed-order linear recursion
        std::vector<Poly> w;
        Rat fact(1);
        for (int i = 0; i <= 11; ++i) {
            fact *= Rat(i + 1);
            w.push_back(Poly::constant(fact));
        }
        CHECK_FALSE(detect_recursion(SeqFunctional::make(w), 3).has_value());
    }
}

TEST_CASE("decomposition over the power basis") {
    SUBCASE("2^i plus a lambda spike at index 1") {
        std::vector<Poly> w;
        for (int i = 0; i <= 9; ++i) w.push_back(Poly::constant(Rat(2).pow(i)));
        w[1] += P("lam");
        auto f = SeqFunctional::make(w);
        auto cert = detect_recursion(f, 3);
        REQUIRE(cert.has_value());
        auto dec = decompose(f, *cert);
        REQUIRE(dec.power_terms.size() == 1);
        CHECK(dec.power_terms[0].first == P("1"));
        CHECK(dec.power_terms[0].second.a == Rat(2));
        CHECK(dec.power_terms[0].second.m == 0);
        REQUIRE(dec.finite_terms.size() == 1);
        CHECK(dec.finite_terms[0].first == P("-d"));
        CHECK(dec.finite_terms[0].second == 1);
        CHECK(reconstruct(dec, 9) == f.window);
    }

    SUBCASE("pure geometric") {
        std::vector<Poly> w;
        for (int i = 0; i <= 8; ++i) w.push_back(Poly::constant(Rat(3).pow(i)));
        auto f = SeqFunctional::make(w);
        auto dec = decompose(f, *detect_recursion(f, 3));
        REQUIRE(dec.power_terms.size() == 1);
        CHECK(dec.power_terms[0].first == P("1"));
        CHECK(dec.power_terms[0].second.a == Rat(3));
        CHECK(dec.finite_terms.empty());
    }

    SUBCASE("fibonacci certificate exists but does not split") {
        auto f = fibonacci_window(12);
        auto cert = detect_recursion(f, 4);
        REQUIRE(cert.has_value());
        CHECK_THROWS_AS(decompose(f, *cert), IrrationalRoots);
    }
}

TEST_CASE("certificates are shift-stable") {
    std::vector<Poly> w;
    for (int i = 0; i <= 11; ++i) w.push_back(Poly::constant(Rat(2).pow(i) + Rat(i)));
    auto f = SeqFunctional::make(w);
    auto cert = detect_recursion(f, 5);
    REQUIRE(cert.has_value());
    // Any later offset still satisfies the recursion on the window.
    const int r = cert->order();
    for (int start = cert->offset; start + r < f.size(); ++start) {
        Poly sum;
        for (int s = 0; s <= r; ++s)
            sum += Poly::constant(cert->betas[s]) * f.window[start + s];
        CHECK(sum.is_zero());
    }
}

TEST_CASE("planted round trips") {
    std::mt19937 rng(2718);
    const std::vector<Rat> root_pool = {Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(3)};
    for (int inst = 0; inst < 12; ++inst) {
        // Plant up to 2 roots with multiplicities <= 2 plus a spike.
        Decomposition planted;
        std::vector<Rat> roots = root_pool;
        std::shuffle(roots.begin(), roots.end(), rng);
        int nroots = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < nroots; ++t) {
            int mult = 1 + static_cast<int>(rng() % 2);
            for (int l = 0; l < mult; ++l) {
                Poly coeff = confal::testing::random_poly(rng, {Var::D}, 2, 2);
                if (coeff.is_zero()) coeff = P("1");
                planted.power_terms.emplace_back(coeff, PowerFunctional{roots[t], l});
            }
        }
        planted.finite_terms.emplace_back(P("1+d"), static_cast<int>(rng() % 3));
        auto window = reconstruct(planted, 25);
        auto f = SeqFunctional::make(window);
        auto cert = detect_recursion(f, 8);
        REQUIRE(cert.has_value());
        auto dec = decompose(f, *cert);
        CHECK(reconstruct(dec, 25) == window);
    }
}

TEST_CASE("lambda action windows") {
    // f = L_2^*: nonzero only opposite index 2.
    auto l2 = window_of({"0", "0", "1", "0"});
    auto act = lambda_action(l2, 1);
    REQUIRE(act.size() == 3);
    CHECK(act[0] == Poly::zero());
    CHECK(act[1] == P("lam-mu"));
    CHECK(act[2] == Poly::zero());

    // constant window: every entry (lam - mu).
    auto ones = f_am(Rat(1), 0, 4);
    for (const auto& p : lambda_action(ones, 0)) CHECK(p == P("lam-mu"));

    auto zero = window_of({"0", "0"});
    for (const auto& p : lambda_action(zero, 1)) CHECK(p == Poly::zero());

    CHECK_THROWS_AS(lambda_action(l2, 7), WindowTooSmall);
}

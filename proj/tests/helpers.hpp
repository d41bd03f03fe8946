#pragma once

#include <random>
#include <vector>

#include "confal/catalog.hpp"
#include "confal/dsl.hpp"
#include "confal/lca.hpp"
#include "confal/poly.hpp"

namespace confal::testing {

inline Poly P(const char* text) { return Poly::parse(text); }

inline Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

/// Random polynomial over the given variables with per-variable degree
/// bound; may be zero.
inline Poly random_poly(std::mt19937& rng, const std::vector<Var>& vars,
                        unsigned max_degree, int terms = 3) {
    Poly p;
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        Mono m{};
        for (Var v : vars) m[static_cast<std::size_t>(v)] = deg(rng);
        p += Poly::monomial(random_rat(rng), m);
    }
    return p;
}

/// Random rank-n conformal structure with entries in C[lam, d]; arbitrary
/// (usually not axiom-satisfying).
inline ConformalStructure random_structure(std::mt19937& rng, int rank,
                                           unsigned max_degree) {
    ConformalStructure s;
    for (int i = 0; i < rank; ++i) s.basis.push_back("b" + std::to_string(i));
    std::uniform_int_distribution<int> idx(0, rank - 1);
    std::uniform_int_distribution<int> count(0, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int c = count(rng); c-- > 0;) {
                Poly p = random_poly(rng, {Var::Lam, Var::D}, max_degree, 2);
                if (!p.is_zero()) s.set_entry(i, j, idx(rng), p);
            }
    return s;
}

/// Deterministic sample of definitions covering every kind that exports to
/// model JSON.
std::vector<Definition> generated_models(int count);

}  // namespace confal::testing

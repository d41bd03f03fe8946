#include "helpers.hpp"

#include "confal/jordan.hpp"

namespace confal::testing {

std::vector<Definition> generated_models(int count) {
    std::mt19937 rng(20240901);
    std::vector<Definition> models;
    std::uniform_int_distribution<int> rank_dist(1, 3);
    for (int n = 0; n < count; ++n) {
        const int which = n % 6;
        const int rank = rank_dist(rng);
        Definition def;
        def.name = "m" + std::to_string(n);
        for (int i = 0; i < rank; ++i) def.basis.push_back("b" + std::to_string(i));
        std::uniform_int_distribution<int> idx(0, rank - 1);
        switch (which) {
            case 0:
            case 1: {
                def.kind = which == 0 ? DefKind::ConformalAlgebra
                                      : DefKind::JordanConformalAlgebra;
                for (int t = 0; t < rank + 1; ++t) {
                    Poly p = random_poly(rng, {Var::Lam, Var::D}, 2);
                    if (!p.is_zero())
                        def.structure[{idx(rng), idx(rng)}][idx(rng)] = p;
                }
                break;
            }
            case 2:
            case 3: {
                def.kind =
                    which == 2 ? DefKind::Coalgebra : DefKind::JordanCoalgebra;
                for (int t = 0; t < rank + 1; ++t) {
                    Poly q = random_poly(rng, {Var::X, Var::Y}, 2);
                    if (!q.is_zero())
                        def.coproduct[idx(rng)][{idx(rng), idx(rng)}] = q;
                }
                break;
            }
            case 4: {
                def.kind = DefKind::LieAlgebra;
                // Antisymmetric constant table (not necessarily Jacobi).
                for (int t = 0; t < rank; ++t) {
                    int i = idx(rng), j = idx(rng), k = idx(rng);
                    if (i == j) continue;
                    Rat c = random_rat(rng);
                    if (c.is_zero()) continue;
                    def.structure[{i, j}][k] = Poly::constant(c);
                    def.structure[{j, i}][k] = Poly::constant(-c);
                }
                break;
            }
            case 5: {
                def.kind = DefKind::Sequence;
                def.basis.clear();
                int len = 3 + (n % 4);
                for (int i = 0; i < len; ++i)
                    def.window.push_back(random_poly(rng, {Var::Lam}, 2, 2));
                break;
            }
        }
        models.push_back(std::move(def));
    }
    return models;
}

}  // namespace confal::testing

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "confal/catalog.hpp"
#include "confal/dlc.hpp"
#include "confal/jordan.hpp"
#include "confal/lca.hpp"
#include "confal/matrix.hpp"
#include "confal/poly.hpp"

namespace confal {

enum class DefKind {
    LieAlgebra,
    ConformalAlgebra,
    Coalgebra,
    JordanConformalAlgebra,
    JordanCoalgebra,
    Hom,
    Ideal,
    Sequence,
};

std::string_view def_kind_name(DefKind k);
std::optional<DefKind> def_kind_from_name(std::string_view name);

/// One parsed top-level definition. Which payload fields are meaningful
/// depends on `kind`; unused ones stay empty.
struct Definition {
    DefKind kind{};
    std::string name;

    // algebra / coalgebra kinds
    std::vector<std::string> basis;
    std::map<std::pair<int, int>, std::map<int, Poly>> structure;
    std::map<int, std::map<std::pair<int, int>, Poly>> coproduct;

    // hom
    std::string source;
    std::string target;
    PolyMatrix hom_matrix;

    // ideal
    std::string of;
    std::map<int, Poly> ideal_gens;

    // sequence
    std::vector<Poly> window;

    friend bool operator==(const Definition& a, const Definition& b) {
        return a.kind == b.kind && a.name == b.name && a.basis == b.basis &&
               a.structure == b.structure && a.coproduct == b.coproduct &&
               a.source == b.source && a.target == b.target &&
               a.hom_matrix == b.hom_matrix && a.of == b.of &&
               a.ideal_gens == b.ideal_gens && a.window == b.window;
    }
};

/// Parses DSL text into definitions. Syntax errors carry line/column;
/// undeclared basis symbols and duplicate names are rejected.
std::vector<Definition> parse_dsl(std::string_view text);

/// Conversions between definitions and the library objects.
LieConformalAlgebra to_conformal(const Definition& def);
DiffLieCoalgebra to_coalgebra(const Definition& def);
JordanConformalAlgebra to_jordan(const Definition& def);
DiffJordanCoalgebra to_jordan_coalgebra(const Definition& def);
DiagonalIdeal to_ideal(const Definition& def);

Definition definition_of(const LieConformalAlgebra& L, std::string name);
Definition definition_of(const DiffLieCoalgebra& C, std::string name);
Definition definition_of(const JordanConformalAlgebra& J, std::string name);
Definition definition_of(const DiffJordanCoalgebra& C, std::string name);
Definition definition_of(const LieAlgebraSC& g, std::string name);

}  // namespace confal

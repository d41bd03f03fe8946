#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confal/matrix.hpp"
#include "confal/poly.hpp"
#include "confal/report.hpp"

namespace confal {

/// Element sum_i p_i(d) a_i of a free module; zero coefficients absent.
struct Element {
    std::map<int, Poly> coeffs;

    static Element basis(int i) { return Element{{{i, Poly::constant(Rat(1))}}}; }
    static Element single(int i, Poly p);
    bool is_zero() const { return coeffs.empty(); }
};

/// Element of C[lam] (x) L; coefficients may involve lam and d.
struct LambdaElement {
    std::map<int, Poly> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const LambdaElement& a, const LambdaElement& b) {
        return a.coeffs == b.coeffs;
    }
};

/// Structure table of a lambda-bracket/product: (i,j) -> { k -> P^{ij}_k }.
/// Polynomials are restricted to lam and d; absent pairs mean zero.
struct ConformalStructure {
    std::vector<std::string> basis;
    std::map<std::pair<int, int>, std::map<int, Poly>> table;

    int rank() const { return static_cast<int>(basis.size()); }
    const std::map<int, Poly>& entry(int i, int j) const;
    void set_entry(int i, int j, int k, Poly p);

    /// Throws InvalidArgument on out-of-range indices, zero entries or
    /// polynomials outside C[lam, d].
    void validate() const;

    friend bool operator==(const ConformalStructure& a, const ConformalStructure& b) {
        return a.basis == b.basis && a.table == b.table;
    }
};

/// Generalized product of two elements whose coefficients may involve the
/// free parameters lam/mu/nu and d, with the bracket parameter `param`
/// (which must not occur in the inputs): sesquilinearity maps the left
/// coefficients d -> -param and the right ones d -> param + d.
std::map<int, Poly> conformal_product(const ConformalStructure& s,
                                      const std::map<int, Poly>& u,
                                      const std::map<int, Poly>& v, Var param);

/// Finite free Lie conformal algebra presented by structure polynomials.
class LieConformalAlgebra {
public:
    static LieConformalAlgebra make(ConformalStructure data);

    int rank() const { return data_.rank(); }
    const std::vector<std::string>& basis_names() const { return data_.basis; }
    const ConformalStructure& data() const { return data_; }
    const std::map<int, Poly>& entry(int i, int j) const { return data_.entry(i, j); }

    friend bool operator==(const LieConformalAlgebra& a, const LieConformalAlgebra& b) {
        return a.data_ == b.data_;
    }

private:
    ConformalStructure data_;
};

/// Diagonal C[d]-submodule (+)_i a_i(d) C[d] e_i: index -> nonzero generator
/// polynomial in d. Absent index means the line is not in the submodule;
/// generator 1 means the full line.
struct DiagonalIdeal {
    std::map<int, Poly> gens;

    static DiagonalIdeal lines(const std::vector<int>& indices);
    bool is_line_ideal() const;  ///< all generators equal to 1
};

/// [a lam b] with full sesquilinear expansion.
LambdaElement lambda_bracket(const LieConformalAlgebra& L, const Element& a,
                             const Element& b);

/// Skew-symmetry: P^{ij}_k(lam, d) + P^{ji}_k(-lam-d, d) = 0.
CheckReport check_skew(const LieConformalAlgebra& L);

/// Jacobi identity on all basis triples, as an identity in C[lam, mu, d].
CheckReport check_jacobi(const LieConformalAlgebra& L);

/// Structure polynomials in the basis a'_i = sum_j C_ij(d) a_j. C must be
/// unimodular over C[d]; throws NotUnimodular otherwise.
LieConformalAlgebra base_change(const LieConformalAlgebra& L, const PolyMatrix& C);

/// Ideal test: [e_j lam a_i(d) e_i] must lie in C[lam] (x) I for every
/// generator line i and basis index j.
CheckReport check_ideal(const LieConformalAlgebra& L, const DiagonalIdeal& I);

/// Quotient by an ideal spanned by full basis lines. Throws NonFreeQuotient
/// when a generator has positive degree, NotAnIdeal when I is not an ideal.
/// `kept` (optional) receives the surviving old basis indices in order.
LieConformalAlgebra quotient_by_line_ideal(const LieConformalAlgebra& L,
                                           const DiagonalIdeal& I,
                                           std::vector<int>* kept = nullptr);

}  // namespace confal

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confal/lca.hpp"
#include "confal/poly.hpp"
#include "confal/report.hpp"

namespace confal {

/// Element of C (x) C; leg derivations are the variables x and y.
struct Tensor2 {
    std::map<std::pair<int, int>, Poly> terms;

    void add(int i, int j, const Poly& p);
    bool is_zero() const { return terms.empty(); }
    Tensor2 swapped_legs() const;  ///< tau: legs and x<->y exchanged

    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        return a.terms == b.terms;
    }
    friend Tensor2 operator-(const Tensor2& a);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b);
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b);
};

/// Element of C (x) C (x) C; leg derivations x, y, z.
struct Tensor3 {
    std::map<std::array<int, 3>, Poly> terms;

    void add(int i, int j, int k, const Poly& p);
    bool is_zero() const { return terms.empty(); }
};

/// Coproduct table: k -> { (i,j) -> Q^{ij}_k(x, y) }. Absent k means zero.
struct CoalgebraStructure {
    std::vector<std::string> basis;
    std::map<int, std::map<std::pair<int, int>, Poly>> table;

    int rank() const { return static_cast<int>(basis.size()); }
    const std::map<std::pair<int, int>, Poly>& entry(int k) const;
    void set_entry(int k, int i, int j, Poly q);
    void validate() const;

    friend bool operator==(const CoalgebraStructure& a, const CoalgebraStructure& b) {
        return a.basis == b.basis && a.table == b.table;
    }
};

/// Finite free differential Lie coalgebra presented by coproduct polynomials.
class DiffLieCoalgebra {
public:
    static DiffLieCoalgebra make(CoalgebraStructure data);

    int rank() const { return data_.rank(); }
    const std::vector<std::string>& basis_names() const { return data_.basis; }
    const CoalgebraStructure& data() const { return data_; }
    const std::map<std::pair<int, int>, Poly>& entry(int k) const {
        return data_.entry(k);
    }

    friend bool operator==(const DiffLieCoalgebra& a, const DiffLieCoalgebra& b) {
        return a.data_ == b.data_;
    }

private:
    CoalgebraStructure data_;
};

/// delta(sum_k p_k(d) c_k) = sum_k p_k(x + y) delta(c_k).
Tensor2 coproduct_apply(const DiffLieCoalgebra& C, const Element& e);

/// Co-skew-symmetry: Q^{ij}_k(x,y) + Q^{ji}_k(y,x) = 0.
CheckReport check_coskew(const DiffLieCoalgebra& C);

/// Co-Jacobi: (I (x) delta)delta - (tau (x) I)(I (x) delta)delta
///            - (delta (x) I)delta = 0 on every basis element.
CheckReport check_cojacobi(const DiffLieCoalgebra& C);

}  // namespace confal

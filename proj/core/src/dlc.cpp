#include "confal/dlc.hpp"

#include "confal/errors.hpp"

namespace confal {

namespace {

const std::map<std::pair<int, int>, Poly> kEmptyCoproduct;

const std::map<Var, Poly>& swap_xy() {
    static const std::map<Var, Poly> m = {{Var::X, Poly::y()}, {Var::Y, Poly::x()}};
    return m;
}

}  // namespace

void Tensor2::add(int i, int j, const Poly& p) {
    if (p.is_zero()) return;
    Poly& slot = terms[{i, j}];
    slot += p;
    if (slot.is_zero()) terms.erase({i, j});
}

Tensor2 Tensor2::swapped_legs() const {
    Tensor2 out;
    for (const auto& [ij, p] : terms) out.add(ij.second, ij.first, p.subst(swap_xy()));
    return out;
}

Tensor2 operator-(const Tensor2& a) {
    Tensor2 out;
    for (const auto& [ij, p] : a.terms) out.terms.emplace(ij, -p);
    return out;
}

Tensor2 operator+(Tensor2 a, const Tensor2& b) {
    for (const auto& [ij, p] : b.terms) a.add(ij.first, ij.second, p);
    return a;
}

Tensor2 operator-(Tensor2 a, const Tensor2& b) {
    for (const auto& [ij, p] : b.terms) a.add(ij.first, ij.second, -p);
    return a;
}

void Tensor3::add(int i, int j, int k, const Poly& p) {
    if (p.is_zero()) return;
    std::array<int, 3> key = {i, j, k};
    Poly& slot = terms[key];
    slot += p;
    if (slot.is_zero()) terms.erase(key);
}

const std::map<std::pair<int, int>, Poly>& CoalgebraStructure::entry(int k) const {
    auto it = table.find(k);
    return it == table.end() ? kEmptyCoproduct : it->second;
}

void CoalgebraStructure::set_entry(int k, int i, int j, Poly q) {
    if (q.is_zero()) return;
    table[k][{i, j}] = std::move(q);
}

void CoalgebraStructure::validate() const {
    const int n = rank();
    auto check_index = [n](int i) {
        if (i < 0 || i >= n) throw IndexOutOfRank("coalgebra index out of rank");
    };
    for (const auto& [k, terms] : table) {
        check_index(k);
        if (terms.empty()) throw InvalidArgument("empty coproduct entry stored");
        for (const auto& [ij, q] : terms) {
            check_index(ij.first);
            check_index(ij.second);
            if (q.is_zero()) throw InvalidArgument("zero coproduct polynomial stored");
            if (!q.uses_only(kVarsXY))
                throw InvalidArgument("coproduct polynomial outside C[x, y]");
        }
    }
}

DiffLieCoalgebra DiffLieCoalgebra::make(CoalgebraStructure data) {
    data.validate();
    DiffLieCoalgebra C;
    C.data_ = std::move(data);
    return C;
}

Tensor2 coproduct_apply(const DiffLieCoalgebra& C, const Element& e) {
    const std::map<Var, Poly> d_to_legs = {{Var::D, Poly::x() + Poly::y()}};
    Tensor2 out;
    for (const auto& [k, p] : e.coeffs) {
        if (k < 0 || k >= C.rank()) throw IndexOutOfRank("element index out of rank");
        Poly factor = p.subst(d_to_legs);
        for (const auto& [ij, q] : C.entry(k)) out.add(ij.first, ij.second, factor * q);
    }
    return out;
}

CheckReport check_coskew(const DiffLieCoalgebra& C) {
    CheckReport report;
    for (int k = 0; k < C.rank(); ++k) {
        std::map<std::pair<int, int>, Poly> residual;
        for (const auto& [ij, q] : C.entry(k)) {
            residual[ij] += q;
            residual[{ij.second, ij.first}] += q.subst(swap_xy());
        }
        for (const auto& [ij, r] : residual)
            if (!r.is_zero()) report.add_failure({ij.first, ij.second, k}, r);
    }
    return report;
}

CheckReport check_cojacobi(const DiffLieCoalgebra& C) {
    CheckReport report;
    const std::map<Var, Poly> split_right = {{Var::Y, Poly::y() + Poly::z()}};
    const std::map<Var, Poly> split_left = {{Var::X, Poly::x() + Poly::y()},
                                            {Var::Y, Poly::z()}};
    const std::map<Var, Poly> inner_right = {{Var::X, Poly::y()}, {Var::Y, Poly::z()}};

    for (int k = 0; k < C.rank(); ++k) {
        Tensor3 residual;
        // (I (x) delta) delta
        for (const auto& [ab, q] : C.entry(k)) {
            Poly outer = q.subst(split_right);
            for (const auto& [pq, inner] : C.entry(ab.second)) {
                Poly contrib = outer * inner.subst(inner_right);
                residual.add(ab.first, pq.first, pq.second, contrib);
                // -(tau (x) I)(I (x) delta) delta: swap legs 1, 2.
                residual.add(pq.first, ab.first, pq.second,
                             -contrib.subst(swap_xy()));
            }
        }
        // -(delta (x) I) delta
        for (const auto& [ab, q] : C.entry(k)) {
            Poly outer = q.subst(split_left);
            for (const auto& [pq, inner] : C.entry(ab.first))
                residual.add(pq.first, pq.second, ab.second, -(outer * inner));
        }
        for (const auto& [ijk, r] : residual.terms)
            report.add_failure({ijk[0], ijk[1], ijk[2], k}, r);
    }
    return report;
}

}  // namespace confal

#include "confal/recursion.hpp"

#include <algorithm>
#include <map>

#include "confal/catalog.hpp"
#include "confal/errors.hpp"
#include "confal/matrix.hpp"

namespace confal {

namespace {

Rat rat_pow_int(const Rat& a, int e) { return a.pow(static_cast<unsigned>(e)); }

/// i^m with the 0^0 = 1 convention.
Rat int_pow(int i, int m) {
    Rat r(1);
    for (int t = 0; t < m; ++t) r *= Rat(i);
    return r;
}

}  // namespace

Rat binomial(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (int t = 1; t <= k; ++t) r *= Rat(n - t + 1) / Rat(t);
    return r;
}

SeqFunctional SeqFunctional::make(std::vector<Poly> window) {
    if (window.empty()) throw InvalidArgument("sequence window must be non-empty");
    for (const auto& p : window)
        if (!p.uses_only(kVarsLam))
            throw InvalidArgument("window entries must lie in C[lam]");
    return SeqFunctional{std::move(window)};
}

ConformalFunctional SeqFunctional::functional() const {
    ConformalFunctional f;
    f.ambient_rank = size();
    f.truncated = true;
    for (int i = 0; i < size(); ++i)
        if (!window[i].is_zero()) f.coords.emplace(i, window[i]);
    return f;
}

SeqFunctional f_am(const Rat& a, int m, int window_top) {
    if (a.is_zero()) throw InvalidArgument("f_{a,m} requires a != 0");
    if (m < 0 || window_top < 0) throw InvalidArgument("f_{a,m} negative parameter");
    std::vector<Poly> window;
    window.reserve(window_top + 1);
    for (int i = 0; i <= window_top; ++i)
        window.push_back(Poly::constant(rat_pow_int(a, i) * int_pow(i, m)));
    return SeqFunctional::make(std::move(window));
}

Tensor2 delta_f_am(const Rat& a, int m) {
    if (a.is_zero()) throw InvalidArgument("f_{a,m} requires a != 0");
    Tensor2 out;
    Poly x_minus_y = Poly::x() - Poly::y();
    for (int j = 0; j <= m; ++j)
        out.add(j, m - j, Poly::constant(binomial(m, j)) * x_minus_y);
    return out;
}

CheckReport verify_fam_pairing(const Rat& a, int m, int rmax) {
    if (a.is_zero()) throw InvalidArgument("f_{a,m} requires a != 0");
    if (rmax < 1) throw InvalidArgument("verify_fam_pairing requires rmax >= 1");
    CheckReport report;
    LieConformalAlgebra witt = witt_truncated(2 * rmax);
    ConformalFunctional f = f_am(a, m, 2 * rmax).functional();
    Poly two_mu_lam = Poly::constant(Rat(2)) * Poly::mu() + Poly::lam();
    for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= rmax; ++s) {
            Poly closed = two_mu_lam *
                          Poly::constant(rat_pow_int(a, r + s) * int_pow(r + s, m));
            Poly pi_side = evaluate_pi(witt, f, Element::basis(r), Element::basis(s));
            // Phi_{-mu} of delta(f_{a,m}): each term contributes
            // mu^... via (x - y) |-> (2 mu + lam) and constant leg values.
            Poly phi_side;
            for (int j = 0; j <= m; ++j)
                phi_side += two_mu_lam *
                            Poly::constant(binomial(m, j) * rat_pow_int(a, r) *
                                           int_pow(r, j) * rat_pow_int(a, s) *
                                           int_pow(s, m - j));
            if (pi_side != closed) report.add_failure({r, s, 0}, pi_side - closed);
            if (phi_side != closed) report.add_failure({r, s, 1}, phi_side - closed);
        }
    return report;
}

namespace {

/// Per-lambda-degree scalar sequences of a window.
std::vector<std::vector<Rat>> degree_sequences(const SeqFunctional& f) {
    unsigned maxdeg = 0;
    for (const auto& p : f.window) maxdeg = std::max(maxdeg, p.degree(Var::Lam));
    std::vector<std::vector<Rat>> seq(maxdeg + 1,
                                      std::vector<Rat>(f.window.size(), Rat(0)));
    for (std::size_t i = 0; i < f.window.size(); ++i)
        for (const auto& [e, coeff] : f.window[i].coefficients_in(Var::Lam)) {
            auto c = coeff.constant_value();
            seq[e][i] = *c;  // windows are validated to lie in C[lam]
        }
    return seq;
}

}  // namespace

std::optional<RecursionCertificate> detect_recursion(const SeqFunctional& f,
                                                     int max_order) {
    if (max_order < 0) throw InvalidArgument("max_order must be non-negative");
    const int w = f.size();
    if (w < 2 * max_order + 2)
        throw WindowTooSmall("window shorter than 2*max_order + 2");
    auto seq = degree_sequences(f);

    for (int r = 0; r <= max_order; ++r) {
        // Offsets keeping at least r+1 constraint rows per degree; larger
        // offsets would leave the Hankel system vacuously solvable.
        for (int offset = 0; offset <= w - 2 * r - 1; ++offset) {
            std::vector<std::vector<Rat>> rows;
            for (const auto& degree_seq : seq)
                for (int m = offset; m + r < w; ++m) {
                    std::vector<Rat> row(r + 1);
                    for (int s = 0; s <= r; ++s) row[s] = degree_seq[m + s];
                    rows.push_back(std::move(row));
                }
            auto null_basis = rat_null_space(std::move(rows), r + 1);
            if (null_basis.empty()) continue;
            std::vector<Rat> beta = null_basis.front();
            // At the minimal (order, offset) the null space is a line with
            // nonzero trailing entry; normalize it to 1.
            if (beta.back().is_zero()) continue;
            Rat inv = beta.back().inverse();
            for (auto& b : beta) b *= inv;
            return RecursionCertificate{std::move(beta), offset};
        }
    }
    return std::nullopt;
}

namespace {

/// Complete factorization by trial division; a leftover cofactor above the
/// bound is kept as if prime (desk-scale inputs never reach it).
std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> factors;
    if (n < 0) n = -n;
    if (n <= 1) return factors;
    auto push = [&factors](const BigInt& p, int e) { factors.emplace_back(p, e); };
    int e2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e2;
    }
    if (e2) push(2, e2);
    BigInt p = 3;
    const BigInt bound = 1000000;
    while (p <= bound && p * p <= n) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) push(p, e);
        p += 2;
    }
    if (n > 1) push(n, 1);
    return factors;
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> divs = {1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (int t = 1; t <= e; ++t) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

Rat horner(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Divides by (x - root); the remainder is known to vanish.
std::vector<Rat> deflate(const std::vector<Rat>& coeffs, const Rat& root) {
    std::vector<Rat> q(coeffs.size() - 1);
    Rat carry(0);
    for (std::size_t i = coeffs.size(); i-- > 1;) {
        carry = coeffs[i] + root * carry;
        q[i - 1] = carry;
    }
    return q;
}

/// All rational roots with multiplicity; throws IrrationalRoots when the
/// polynomial does not split.
std::vector<Rat> rational_roots(std::vector<Rat> coeffs) {
    std::vector<Rat> roots;
    while (coeffs.size() > 1) {
        // Integer form for the candidate search.
        BigInt denom_lcm = 1;
        for (const auto& c : coeffs)
            denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, c.den()) *
                        c.den();
        BigInt lead = coeffs.back().num() * (denom_lcm / coeffs.back().den());
        BigInt constant = coeffs.front().num() * (denom_lcm / coeffs.front().den());
        bool found = false;
        for (const BigInt& p : divisors(constant)) {
            for (const BigInt& q : divisors(lead)) {
                for (int sign : {1, -1}) {
                    Rat candidate(sign * p, q);
                    if (horner(coeffs, candidate).is_zero()) {
                        roots.push_back(candidate);
                        coeffs = deflate(coeffs, candidate);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw IrrationalRoots(
                "characteristic polynomial does not split over the rationals");
    }
    return roots;
}

}  // namespace

Decomposition decompose(const SeqFunctional& f, const RecursionCertificate& cert) {
    if (cert.betas.empty() ||
        std::all_of(cert.betas.begin(), cert.betas.end(),
                    [](const Rat& b) { return b.is_zero(); }))
        throw InvalidArgument("certificate betas must not all vanish");
    const int w = f.size();

    // Zero characteristic roots only shift the pre-periodic region.
    int lead_zeros = 0;
    while (cert.betas[lead_zeros].is_zero()) ++lead_zeros;
    std::vector<Rat> char_poly(cert.betas.begin() + lead_zeros, cert.betas.end());
    std::vector<Rat> roots = rational_roots(char_poly);
    std::sort(roots.begin(), roots.end());

    // Group roots: (value, multiplicity) -> unknowns c_{t,l}, l < mult.
    std::vector<std::pair<Rat, int>> groups;
    for (const auto& r : roots) {
        if (r.is_zero())
            throw InvalidArgument("zero characteristic root after normalization");
        if (!groups.empty() && groups.back().first == r)
            ++groups.back().second;
        else
            groups.emplace_back(r, 1);
    }
    const int k_unknowns = static_cast<int>(roots.size());
    const int tail_start = cert.offset + lead_zeros;
    if (tail_start + k_unknowns > w)
        throw WindowTooSmall("window too short to solve for the power basis");

    // Column layout: for each group t, exponents l = 0..mult-1.
    std::vector<std::pair<int, int>> columns;  // (group, l)
    for (std::size_t t = 0; t < groups.size(); ++t)
        for (int l = 0; l < groups[t].second; ++l)
            columns.emplace_back(static_cast<int>(t), l);

    auto basis_value = [&](int col, int i) {
        const auto& [t, l] = columns[col];
        return rat_pow_int(groups[t].first, i) * int_pow(i, l);
    };

    auto seq = degree_sequences(f);
    const int degrees = static_cast<int>(seq.size());

    // Per degree: solve the square initial-condition system on the tail,
    // verify the rest of the window, and absorb the head into L_i^* terms.
    std::vector<std::vector<Rat>> power_coeffs(
        columns.size(), std::vector<Rat>(degrees, Rat(0)));
    std::vector<std::vector<Rat>> finite_coeffs(tail_start,
                                                std::vector<Rat>(degrees, Rat(0)));
    for (int k = 0; k < degrees; ++k) {
        std::vector<Rat> solution(columns.size(), Rat(0));
        if (k_unknowns > 0) {
            std::vector<std::vector<Rat>> a(k_unknowns,
                                            std::vector<Rat>(k_unknowns, Rat(0)));
            std::vector<Rat> b(k_unknowns, Rat(0));
            for (int row = 0; row < k_unknowns; ++row) {
                int i = tail_start + row;
                for (int col = 0; col < k_unknowns; ++col)
                    a[row][col] = basis_value(col, i);
                b[row] = seq[k][i];
            }
            auto solved = rat_solve(std::move(a), std::move(b));
            if (!solved)
                throw InvalidArgument("degenerate power-basis system");
            solution = std::move(*solved);
        }
        for (int i = tail_start; i < w; ++i) {
            Rat prediction(0);
            for (std::size_t col = 0; col < columns.size(); ++col)
                prediction += solution[col] * basis_value(static_cast<int>(col), i);
            if (prediction != seq[k][i])
                throw InvalidArgument("certificate does not annihilate the window");
        }
        for (std::size_t col = 0; col < columns.size(); ++col)
            power_coeffs[col][k] = solution[col];
        for (int i = 0; i < tail_start; ++i) {
            Rat prediction(0);
            for (std::size_t col = 0; col < columns.size(); ++col)
                prediction += solution[col] * basis_value(static_cast<int>(col), i);
            finite_coeffs[i][k] = seq[k][i] - prediction;
        }
    }

    // Scalars per lambda-degree k assemble into (-d)^k coefficients.
    auto assemble = [&](const std::vector<Rat>& per_degree) {
        Poly out;
        Poly minus_d = -Poly::d();
        for (int k = 0; k < degrees; ++k)
            if (!per_degree[k].is_zero())
                out += Poly::constant(per_degree[k]) *
                       minus_d.pow(static_cast<unsigned>(k));
        return out;
    };

    Decomposition dec;
    for (std::size_t col = 0; col < columns.size(); ++col) {
        Poly coeff = assemble(power_coeffs[col]);
        if (coeff.is_zero()) continue;
        const auto& [t, l] = columns[col];
        dec.power_terms.emplace_back(std::move(coeff),
                                     PowerFunctional{groups[t].first, l});
    }
    for (int i = 0; i < tail_start; ++i) {
        Poly coeff = assemble(finite_coeffs[i]);
        if (!coeff.is_zero()) dec.finite_terms.emplace_back(std::move(coeff), i);
    }

    // Postcondition: the decomposition reproduces the window exactly.
    if (reconstruct(dec, w - 1) != f.window)
        throw InvalidArgument("decomposition failed to reproduce the window");
    return dec;
}

std::vector<Poly> reconstruct(const Decomposition& dec, int window_top) {
    static const std::map<Var, Poly> d_to_neg_lam = {{Var::D, -Poly::lam()}};
    std::vector<Poly> window(window_top + 1);
    for (const auto& [coeff, pf] : dec.power_terms) {
        Poly cl = coeff.subst(d_to_neg_lam);
        for (int i = 0; i <= window_top; ++i)
            window[i] += cl * Poly::constant(rat_pow_int(pf.a, i) * int_pow(i, pf.m));
    }
    for (const auto& [coeff, index] : dec.finite_terms)
        if (index >= 0 && index <= window_top)
            window[index] += coeff.subst(d_to_neg_lam);
    return window;
}

std::vector<Poly> lambda_action(const SeqFunctional& f, int j) {
    if (j < 0) throw InvalidArgument("lambda_action index must be non-negative");
    if (j >= f.size())
        throw WindowTooSmall("window too short for the requested action index");
    static const std::map<Var, Poly> lam_to_lam_plus_mu = {
        {Var::Lam, Poly::lam() + Poly::mu()}};
    Poly lam_minus_mu = Poly::lam() - Poly::mu();
    std::vector<Poly> out;
    out.reserve(f.size() - j);
    for (int m = 0; m + j < f.size(); ++m)
        out.push_back(lam_minus_mu * f.window[m + j].subst(lam_to_lam_plus_mu));
    return out;
}

}  // namespace confal

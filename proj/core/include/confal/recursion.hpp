#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "confal/dlc.hpp"
#include "confal/duality.hpp"
#include "confal/poly.hpp"
#include "confal/report.hpp"

namespace confal {

/// Window onto a conformal functional on the Witt-type algebra:
/// window[i] = f_lam(L_i), a polynomial in lam.
struct SeqFunctional {
    std::vector<Poly> window;

    static SeqFunctional make(std::vector<Poly> window);
    int size() const { return static_cast<int>(window.size()); }

    /// The window as a conformal functional of the given ambient rank.
    ConformalFunctional functional() const;
};

/// f_{a,m} with (f_{a,m})_lam(L_i) = a^i i^m; a is nonzero.
struct PowerFunctional {
    Rat a;
    int m = 0;
};

/// Scalar recursion witness: sum_s betas[s] p_{m+s}(lam) = 0 for all
/// m >= offset inside the window; the last beta is normalized to 1.
struct RecursionCertificate {
    std::vector<Rat> betas;
    int offset = 0;

    int order() const { return static_cast<int>(betas.size()) - 1; }
};

/// Exact basis decomposition over { f_{a,m} } and dual-basis terms L_i^*.
/// Coefficients are polynomials in d acting on the functional.
struct Decomposition {
    std::vector<std::pair<Poly, PowerFunctional>> power_terms;
    std::vector<std::pair<Poly, int>> finite_terms;
};

/// Window i = 0..window_top of f_{a,m}; 0^0 = 1. Throws on a = 0.
SeqFunctional f_am(const Rat& a, int m, int window_top);

/// delta(f_{a,m}) = sum_j binom(m,j) (d f_{a,j} (x) f_{a,m-j}
///                  - f_{a,j} (x) d f_{a,m-j}); tensor index j stands for
/// f_{a,j}, the leg derivations are x and y.
Tensor2 delta_f_am(const Rat& a, int m);

/// Both pairing routes against the closed form
/// (2 mu + lam) a^{r+s} (r+s)^m for all r, s <= rmax.
CheckReport verify_fam_pairing(const Rat& a, int m, int rmax);

/// Minimal-order, minimal-offset certificate over the whole window, found
/// per lambda-degree with one shared beta vector (exact null spaces).
/// Requires window length >= 2 max_order + 2 (throws WindowTooSmall);
/// nullopt when no beta of order <= max_order certifies.
std::optional<RecursionCertificate> detect_recursion(const SeqFunctional& f,
                                                     int max_order);

/// Exact decomposition for a certificate whose characteristic polynomial
/// splits over the rationals; throws IrrationalRoots otherwise. The
/// reconstruction is verified against the window before returning.
Decomposition decompose(const SeqFunctional& f, const RecursionCertificate& cert);

/// Window reconstruction of a decomposition, entries 0..window_top.
std::vector<Poly> reconstruct(const Decomposition& dec, int window_top);

/// The auxiliary action (f ._lam L_j) on the Witt-type algebra: entry m is
/// (lam - mu) p_{m+j}(lam + mu), a polynomial in lam (action parameter) and
/// mu (evaluation parameter); the window shortens by j.
std::vector<Poly> lambda_action(const SeqFunctional& f, int j);

/// Rational binomial coefficient.
Rat binomial(int n, int k);

}  // namespace confal

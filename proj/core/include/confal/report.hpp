#pragma once

#include <string>
#include <vector>

#include "confal/poly.hpp"

namespace confal {

enum class Verdict { Pass, Fail, WindowTooSmall };

std::string_view verdict_name(Verdict v);

/// A failing index tuple together with its nonzero residual polynomial.
struct Witness {
    std::vector<int> indices;
    Poly residual;
    std::string note;
};

/// Outcome of an axiom or identity sweep. At most kMaxWitnesses failing
/// tuples are kept; the rest are only counted.
struct CheckReport {
    static constexpr int kMaxWitnesses = 16;

    Verdict verdict = Verdict::Pass;
    std::vector<Witness> witnesses;
    int suppressed_witnesses = 0;

    bool passed() const { return verdict == Verdict::Pass; }

    void add_failure(std::vector<int> indices, Poly residual, std::string note = "") {
        verdict = Verdict::Fail;
        if (static_cast<int>(witnesses.size()) < kMaxWitnesses) {
            witnesses.push_back({std::move(indices), std::move(residual), std::move(note)});
        } else {
            ++suppressed_witnesses;
        }
    }

    /// Records that part of the sweep is not certifiable at this truncation.
    /// Does not downgrade an already failing report.
    void mark_window_too_small(std::vector<int> indices, std::string note) {
        if (verdict == Verdict::Pass) verdict = Verdict::WindowTooSmall;
        if (static_cast<int>(witnesses.size()) < kMaxWitnesses)
            witnesses.push_back({std::move(indices), Poly::zero(), std::move(note)});
    }

    void merge(const CheckReport& other) {
        for (const auto& w : other.witnesses) {
            if (other.verdict == Verdict::Fail || !w.residual.is_zero() || !w.note.empty()) {
                if (static_cast<int>(witnesses.size()) < kMaxWitnesses)
                    witnesses.push_back(w);
                else
                    ++suppressed_witnesses;
            }
        }
        suppressed_witnesses += other.suppressed_witnesses;
        if (other.verdict == Verdict::Fail) verdict = Verdict::Fail;
        else if (other.verdict == Verdict::WindowTooSmall && verdict == Verdict::Pass)
            verdict = Verdict::WindowTooSmall;
    }
};

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::WindowTooSmall: return "window-too-small";
    }
    return "unknown";
}

}  // namespace confal

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "confal/catalog.hpp"
#include "confal/dsl.hpp"
#include "confal/duality.hpp"
#include "confal/errors.hpp"
#include "confal/jordan.hpp"
#include "confal/recursion.hpp"
#include "confal/serialize.hpp"

using namespace confal;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write file: " + path);
    out << text;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<Definition> load_models(const std::string& path, std::string* digest) {
    std::string text = read_file(path);
    if (digest) *digest = sha256_hex(text);
    if (has_suffix(path, ".json")) return definitions_from_json(text);
    return parse_dsl(text);
}

int emit_report(const ToolReport& report) {
    std::cout << report_to_json(report);
    if (!report.error.empty()) return kExitUsage;
    if (report.any_failed()) return kExitFail;
    if (report.any_window_or_unsupported()) return kExitUnsupported;
    return kExitPass;
}

void add_unsupported(ToolReport& report, const std::string& name,
                     const std::string& why) {
    ReportEntry e;
    e.name = name;
    e.verdict = "unsupported";
    e.data["reason"] = why;
    report.entries.push_back(std::move(e));
}

const Definition* find_def(const std::vector<Definition>& defs,
                           const std::string& name) {
    for (const auto& d : defs)
        if (d.name == name) return &d;
    return nullptr;
}

bool algebra_like(DefKind k) {
    return k == DefKind::ConformalAlgebra || k == DefKind::LieAlgebra;
}

// ---------------------------------------------------------------- check

void check_definition(const Definition& def, const std::vector<Definition>& all,
                      bool as_jordan, ToolReport& report) {
    switch (def.kind) {
        case DefKind::ConformalAlgebra:
        case DefKind::LieAlgebra: {
            if (as_jordan) {
                auto J = to_jordan(def);
                report.add(def.name + ".commutativity", check_jordan_commutativity(J));
                report.add(def.name + ".jordan", check_jordan_identity(J));
                break;
            }
            auto L = to_conformal(def);
            report.add(def.name + ".skew", check_skew(L));
            report.add(def.name + ".jacobi", check_jacobi(L));
            break;
        }
        case DefKind::Coalgebra: {
            if (as_jordan) {
                report.add(def.name + ".cojordan",
                           check_cojordan(to_jordan_coalgebra(def)));
                break;
            }
            auto C = to_coalgebra(def);
            report.add(def.name + ".coskew", check_coskew(C));
            report.add(def.name + ".cojacobi", check_cojacobi(C));
            break;
        }
        case DefKind::JordanConformalAlgebra: {
            auto J = to_jordan(def);
            report.add(def.name + ".commutativity", check_jordan_commutativity(J));
            report.add(def.name + ".jordan", check_jordan_identity(J));
            break;
        }
        case DefKind::JordanCoalgebra:
            report.add(def.name + ".cojordan",
                       check_cojordan(to_jordan_coalgebra(def)));
            break;
        case DefKind::Hom: {
            const Definition* src = find_def(all, def.source);
            const Definition* dst = find_def(all, def.target);
            if (!src || !dst) {
                add_unsupported(report, def.name + ".hom", "unresolved source/target");
                break;
            }
            auto F = ModuleHom::make(def.hom_matrix);
            if (algebra_like(src->kind) && algebra_like(dst->kind)) {
                report.add(def.name + ".hom",
                           check_algebra_hom(F, to_conformal(*src), to_conformal(*dst)));
            } else if (src->kind == DefKind::Coalgebra &&
                       dst->kind == DefKind::Coalgebra) {
                report.add(def.name + ".hom", check_coalgebra_hom(F, to_coalgebra(*src),
                                                                  to_coalgebra(*dst)));
            } else {
                add_unsupported(report, def.name + ".hom", "mixed hom kinds");
            }
            break;
        }
        case DefKind::Ideal: {
            const Definition* host = find_def(all, def.of);
            if (!host || !algebra_like(host->kind)) {
                add_unsupported(report, def.name + ".ideal", "unresolved host algebra");
                break;
            }
            report.add(def.name + ".ideal",
                       check_ideal(to_conformal(*host), to_ideal(def)));
            break;
        }
        case DefKind::Sequence:
            break;  // sequences carry no axioms
    }
}

int cmd_check(const std::string& file, bool as_jordan) {
    ToolReport report;
    auto defs = load_models(file, &report.input_digest);
    for (const auto& def : defs) check_definition(def, defs, as_jordan, report);
    return emit_report(report);
}

// ----------------------------------------------------------------- dual

Definition dualize_definition(const Definition& def) {
    switch (def.kind) {
        case DefKind::ConformalAlgebra:
        case DefKind::LieAlgebra:
            return definition_of(dualize_algebra(to_conformal(def)),
                                 def.name + "_dual");
        case DefKind::Coalgebra:
            return definition_of(dualize_coalgebra(to_coalgebra(def)),
                                 def.name + "_dual");
        case DefKind::JordanConformalAlgebra:
            return definition_of(dualize_jordan(to_jordan(def)), def.name + "_dual");
        case DefKind::JordanCoalgebra:
            return definition_of(dualize_jordan_coalgebra(to_jordan_coalgebra(def)),
                                 def.name + "_dual");
        default:
            throw InvalidArgument("cannot dualize definition '" + def.name + "'");
    }
}

std::string render_models(const std::vector<Definition>& defs,
                          const std::string& path_hint) {
    if (has_suffix(path_hint, ".lca")) {
        std::string out;
        for (const auto& d : defs) out += definition_to_dsl(d);
        return out;
    }
    if (has_suffix(path_hint, ".tex")) {
        std::string out;
        for (const auto& d : defs) out += definition_to_latex(d);
        return out;
    }
    return definitions_to_json(defs);
}

int cmd_dual(const std::string& file, const std::string& out_path) {
    auto defs = load_models(file, nullptr);
    std::vector<Definition> duals;
    for (const auto& def : defs)
        if (def.kind != DefKind::Hom && def.kind != DefKind::Ideal &&
            def.kind != DefKind::Sequence)
            duals.push_back(dualize_definition(def));
    std::string text = render_models(duals, out_path);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitPass;
}

// ------------------------------------------------------------ roundtrip

int cmd_roundtrip(const std::string& file) {
    ToolReport report;
    auto defs = load_models(file, &report.input_digest);
    for (const auto& def : defs) {
        CheckReport check;
        switch (def.kind) {
            case DefKind::ConformalAlgebra: {
                auto L = to_conformal(def);
                if (!(dualize_coalgebra(dualize_algebra(L)) == L))
                    check.add_failure({}, Poly::zero(), "double dual differs");
                break;
            }
            case DefKind::Coalgebra: {
                auto C = to_coalgebra(def);
                if (!(dualize_algebra(dualize_coalgebra(C)) == C))
                    check.add_failure({}, Poly::zero(), "double dual differs");
                break;
            }
            case DefKind::JordanConformalAlgebra: {
                auto J = to_jordan(def);
                if (!(dualize_jordan_coalgebra(dualize_jordan(J)) == J))
                    check.add_failure({}, Poly::zero(), "double dual differs");
                break;
            }
            case DefKind::JordanCoalgebra: {
                auto C = to_jordan_coalgebra(def);
                if (!(dualize_jordan(dualize_jordan_coalgebra(C)) == C))
                    check.add_failure({}, Poly::zero(), "double dual differs");
                break;
            }
            default:
                continue;
        }
        report.add(def.name + ".roundtrip", check);
    }
    return emit_report(report);
}

// ------------------------------------------------------------- goodness

GoodnessCandidate load_subspace(const std::string& path, int ambient_rank) {
    auto j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed subspace JSON", 1, 1);
    GoodnessCandidate cand;
    std::vector<ConformalFunctional> basis;
    for (const auto& fj : j.at("functionals")) {
        ConformalFunctional f;
        f.ambient_rank = ambient_rank;
        int i = 0;
        for (const auto& coord : fj.at("coords")) {
            Poly p = Poly::parse(coord.get<std::string>());
            if (!p.is_zero()) f.coords[i] = p;
            ++i;
        }
        basis.push_back(std::move(f));
    }
    cand.basis = SubspaceBasis::make(std::move(basis));
    if (j.contains("delta"))
        for (const auto& [key, terms] : j.at("delta").items()) {
            Tensor2 t;
            for (const auto& term : terms)
                t.add(term.at("i").get<int>(), term.at("j").get<int>(),
                      Poly::parse(term.at("poly").get<std::string>()));
            cand.delta.emplace(std::stoi(key), std::move(t));
        }
    return cand;
}

int cmd_goodness(const std::string& file, const std::string& subspace_path,
                 int window) {
    ToolReport report;
    auto defs = load_models(file, &report.input_digest);
    for (const auto& def : defs) {
        if (!algebra_like(def.kind)) continue;
        auto L = to_conformal(def);
        GoodnessCandidate cand = subspace_path.empty()
                                     ? dual_basis_candidate(L)
                                     : load_subspace(subspace_path, L.rank());
        if (window >= 0)
            for (int t = window + 1; t < cand.basis.size(); ++t) cand.delta.erase(t);
        report.add(def.name + ".goodness", verify_goodness(L, cand));
    }
    return emit_report(report);
}

// ------------------------------------------------------------------ loc

int cmd_loc(const std::string& catalog_name, int top, const std::string& ideal_text) {
    if (catalog_name != "michaelis")
        throw InvalidArgument("loc supports --catalog michaelis");
    ToolReport report;
    report.input_digest = sha256_hex("loc:" + catalog_name + ":" +
                                     std::to_string(top) + ":" + ideal_text);
    auto m = michaelis(top);
    Poly a = Poly::parse(ideal_text);
    auto result = annihilator(m.conformal, m.ideal(a));

    ReportEntry entry;
    entry.name = "annihilator";
    entry.verdict = "pass";
    entry.data["rank"] = std::to_string(result.kept.size());
    std::string basis;
    for (int i : result.kept) {
        if (!basis.empty()) basis += ",";
        basis += m.conformal.basis_names()[i] + "*";
    }
    entry.data["basis"] = basis;
    report.entries.push_back(std::move(entry));
    report.add("goodness", result.goodness);
    return emit_report(report);
}

// -------------------------------------------------------------- catalog

int cmd_catalog(const std::string& name, int rank, const std::string& part,
                const std::string& out_path) {
    std::vector<Definition> defs;
    if (name == "virasoro") {
        defs.push_back(definition_of(virasoro(), "Vir"));
    } else if (name == "witt") {
        defs.push_back(definition_of(witt_truncated(rank), "W" + std::to_string(rank)));
    } else if (name == "michaelis") {
        auto m = michaelis(rank);
        if (part == "lie") {
            defs.push_back(definition_of(m.lie, "michaelis" + std::to_string(rank)));
        } else if (part == "window") {
            Definition def;
            def.kind = DefKind::Coalgebra;
            def.name = "michaelis" + std::to_string(rank) + "_window";
            for (const auto& b : m.lie.basis) def.basis.push_back(b + "*");
            for (const auto& [i, terms] : m.coalgebra_window)
                for (const auto& [pq, c] : terms)
                    def.coproduct[i][pq] = Poly::constant(c);
            defs.push_back(std::move(def));
        } else {
            defs.push_back(
                definition_of(m.conformal, "michaelis" + std::to_string(rank)));
        }
    } else if (name == "sl2") {
        defs.push_back(definition_of(current_algebra(sl2()), "CurSl2"));
    } else if (name == "heisenberg") {
        defs.push_back(definition_of(current_algebra(heisenberg3()), "CurHeis3"));
    } else if (name == "nonabelian2") {
        defs.push_back(definition_of(current_algebra(nonabelian2()), "CurAff1"));
    } else if (name == "jordan-dual") {
        defs.push_back(definition_of(jordan_dual_numbers(), "JDual"));
    } else if (name == "jordan-t3") {
        defs.push_back(definition_of(jordan_truncated3(), "JT3"));
    } else if (name == "jordan-sym2") {
        defs.push_back(definition_of(jordan_sym2(), "JSym2"));
    } else {
        throw InvalidArgument("unknown catalog name: " + name);
    }
    std::string text = render_models(defs, out_path);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitPass;
}

// ------------------------------------------------------------ recursion

std::vector<Poly> load_window(const std::string& path, std::string* digest) {
    std::string text = read_file(path);
    if (digest) *digest = sha256_hex(text);
    return window_from_json(text);
}

int cmd_recursion_detect(const std::string& file, int max_order) {
    ToolReport report;
    auto window = load_window(file, &report.input_digest);
    auto f = SeqFunctional::make(window);
    auto cert = detect_recursion(f, max_order);
    ReportEntry entry;
    entry.name = "recursion.detect";
    entry.verdict = "pass";
    if (cert) {
        entry.data["found"] = "true";
        entry.data["offset"] = std::to_string(cert->offset);
        std::string betas;
        for (const auto& b : cert->betas) {
            if (!betas.empty()) betas += ",";
            betas += b.str();
        }
        entry.data["betas"] = betas;
    } else {
        entry.data["found"] = "false";
    }
    report.entries.push_back(std::move(entry));
    return emit_report(report);
}

int cmd_recursion_decompose(const std::string& file, int max_order) {
    ToolReport report;
    auto window = load_window(file, &report.input_digest);
    auto f = SeqFunctional::make(window);
    auto cert = detect_recursion(f, max_order);
    if (!cert) {
        add_unsupported(report, "recursion.decompose", "no certificate found");
        return emit_report(report);
    }
    auto dec = decompose(f, *cert);
    ReportEntry entry;
    entry.name = "recursion.decompose";
    entry.verdict = "pass";
    int t = 0;
    for (const auto& [coeff, pf] : dec.power_terms)
        entry.data["power." + std::to_string(t++)] =
            "(" + coeff.str() + ") * f[" + pf.a.str() + "," + std::to_string(pf.m) +
            "]";
    t = 0;
    for (const auto& [coeff, index] : dec.finite_terms)
        entry.data["finite." + std::to_string(t++)] =
            "(" + coeff.str() + ") * L" + std::to_string(index) + "^*";
    report.entries.push_back(std::move(entry));
    return emit_report(report);
}

int cmd_recursion_verify_fam(const std::string& a_text, int m, int rmax) {
    ToolReport report;
    report.input_digest = sha256_hex("verify-fam:" + a_text + ":" +
                                     std::to_string(m) + ":" + std::to_string(rmax));
    auto a = Rat::parse(a_text);
    if (!a) throw InvalidArgument("--a expects a rational like 1/2");
    report.add("fam.pairing", verify_fam_pairing(*a, m, rmax));
    return emit_report(report);
}

// ------------------------------------------------------------ triangles

int cmd_triangles(const std::string& file) {
    ToolReport report;
    auto defs = load_models(file, &report.input_digest);
    for (const auto& def : defs) {
        if (algebra_like(def.kind))
            report.add(def.name + ".triangles",
                       verify_triangles_algebra(to_conformal(def)));
        else if (def.kind == DefKind::Coalgebra)
            report.add(def.name + ".triangles",
                       verify_triangles_coalgebra(to_coalgebra(def)));
    }
    return emit_report(report);
}

// --------------------------------------------------------------- export

int cmd_export(const std::string& file, const std::string& format,
               const std::string& out_path) {
    auto defs = load_models(file, nullptr);
    std::string text;
    if (format == "json") {
        text = definitions_to_json(defs);
    } else if (format == "latex") {
        for (const auto& d : defs) text += definition_to_latex(d);
    } else {
        throw InvalidArgument("--format expects json or latex");
    }
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitPass;
}

int report_error(const std::string& message, int code) {
    ToolReport report;
    report.error = message;
    std::cout << report_to_json(report);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for Lie/Jordan conformal algebras and their "
                 "dual differential coalgebras"};
    app.require_subcommand(1);

    std::string file, out_path, subspace_path, format = "json";
    std::string catalog_name, ideal_text = "0", a_text = "1", part = "conformal";
    bool as_jordan = false;
    int window = -1, top = 6, rank = 4, max_order = 6, m_param = 0, rmax = 4;

    auto* check = app.add_subcommand("check", "run the axiom suites");
    check->add_option("file", file)->required();
    check->add_flag("--jordan", as_jordan, "treat algebra definitions as Jordan");

    auto* dual = app.add_subcommand("dual", "dualize every definition");
    dual->add_option("file", file)->required();
    dual->add_option("-o,--output", out_path);

    auto* roundtrip = app.add_subcommand("roundtrip", "assert double-dual identity");
    roundtrip->add_option("file", file)->required();

    auto* goodness =
        app.add_subcommand("goodness", "verify Phi_{-mu} . delta = pi_mu");
    goodness->add_option("file", file)->required();
    goodness->add_option("--subspace", subspace_path, "candidate subspace JSON");
    goodness->add_option("--window", window, "check only the first N+1 functionals");

    auto* loc = app.add_subcommand("loc", "annihilator / locally finite part");
    loc->add_option("--catalog", catalog_name)->required();
    loc->add_option("--N", top)->required();
    loc->add_option("--ideal", ideal_text, "generator a(d) of the e_0 line");

    auto* catalog = app.add_subcommand("catalog", "emit a built-in model");
    catalog->add_option("name", catalog_name)->required();
    catalog->add_option("--rank", rank, "top index for witt/michaelis");
    catalog->add_option("--part", part, "michaelis part: conformal|lie|window");
    catalog->add_option("-o,--output", out_path);

    auto* recursion = app.add_subcommand("recursion", "conformal recursive sequences");
    recursion->require_subcommand(1);
    auto* detect = recursion->add_subcommand("detect", "find a recursion certificate");
    detect->add_option("file", file)->required();
    detect->add_option("--max-order", max_order);
    auto* decompose_cmd =
        recursion->add_subcommand("decompose", "decompose over the f_{a,m} basis");
    decompose_cmd->add_option("file", file)->required();
    decompose_cmd->add_option("--max-order", max_order);
    auto* verify_fam = recursion->add_subcommand("verify-fam", "pairing identity");
    verify_fam->add_option("--a", a_text)->required();
    verify_fam->add_option("--m", m_param)->required();
    verify_fam->add_option("--rmax", rmax);

    auto* triangles =
        app.add_subcommand("triangles", "adjunction triangle identities");
    triangles->add_option("file", file)->required();

    auto* export_cmd = app.add_subcommand("export", "serialize models");
    export_cmd->add_option("file", file)->required();
    export_cmd->add_option("--format", format, "json|latex");
    export_cmd->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(file, as_jordan);
        if (*dual) return cmd_dual(file, out_path);
        if (*roundtrip) return cmd_roundtrip(file);
        if (*goodness) return cmd_goodness(file, subspace_path, window);
        if (*loc) return cmd_loc(catalog_name, top, ideal_text);
        if (*catalog) return cmd_catalog(catalog_name, rank, part, out_path);
        if (*recursion) {
            if (*detect) return cmd_recursion_detect(file, max_order);
            if (*decompose_cmd) return cmd_recursion_decompose(file, max_order);
            if (*verify_fam) return cmd_recursion_verify_fam(a_text, m_param, rmax);
        }
        if (*triangles) return cmd_triangles(file);
        if (*export_cmd) return cmd_export(file, format, out_path);
        return kExitUsage;
    } catch (const ParseError& e) {
        return report_error(e.what(), kExitUsage);
    } catch (const IrrationalRoots& e) {
        return report_error(e.what(), kExitUnsupported);
    } catch (const WindowTooSmall& e) {
        return report_error(e.what(), kExitUnsupported);
    } catch (const NonFreeQuotient& e) {
        return report_error(e.what(), kExitUnsupported);
    } catch (const Error& e) {
        return report_error(e.what(), kExitUsage);
    }
}

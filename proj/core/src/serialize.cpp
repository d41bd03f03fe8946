#include "confal/serialize.hpp"

#include <json.hpp>

#include "confal/errors.hpp"

namespace confal {

using nlohmann::json;

void ToolReport::add(const std::string& name, const CheckReport& check) {
    ReportEntry entry;
    entry.name = name;
    entry.verdict = std::string(verdict_name(check.verdict));
    entry.witnesses = check.witnesses;
    entry.suppressed = check.suppressed_witnesses;
    entries.push_back(std::move(entry));
}

bool ToolReport::all_passed() const {
    if (!error.empty()) return false;
    for (const auto& e : entries)
        if (e.verdict != "pass") return false;
    return true;
}

bool ToolReport::any_failed() const {
    for (const auto& e : entries)
        if (e.verdict == "fail") return true;
    return false;
}

bool ToolReport::any_window_or_unsupported() const {
    for (const auto& e : entries)
        if (e.verdict == "window-too-small" || e.verdict == "unsupported") return true;
    return false;
}

std::string report_to_json(const ToolReport& report) {
    json j;
    j["tool"] = "confal";
    j["version"] = std::string(kToolVersion);
    j["input_digest"] = report.input_digest;
    if (!report.error.empty()) j["error"] = report.error;
    json checks = json::array();
    for (const auto& e : report.entries) {
        json c;
        c["name"] = e.name;
        c["verdict"] = e.verdict;
        json witnesses = json::array();
        for (const auto& w : e.witnesses) {
            json wj;
            wj["indices"] = w.indices;
            wj["residual"] = w.residual.str();
            if (!w.note.empty()) wj["note"] = w.note;
            witnesses.push_back(std::move(wj));
        }
        c["witnesses"] = std::move(witnesses);
        if (e.suppressed > 0) c["suppressed_witnesses"] = e.suppressed;
        if (!e.data.empty()) {
            json d;
            for (const auto& [k, v] : e.data) d[k] = v;
            c["data"] = std::move(d);
        }
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

namespace {

json definition_to_json_object(const Definition& def) {
    json j;
    j["kind"] = std::string(def_kind_name(def.kind));
    j["name"] = def.name;
    switch (def.kind) {
        case DefKind::LieAlgebra:
        case DefKind::ConformalAlgebra:
        case DefKind::JordanConformalAlgebra: {
            j["rank"] = def.basis.size();
            j["basis"] = def.basis;
            json structure = json::array();
            for (const auto& [ij, terms] : def.structure) {
                json entry;
                entry["i"] = ij.first;
                entry["j"] = ij.second;
                json ts = json::array();
                for (const auto& [k, p] : terms) {
                    json t;
                    t["k"] = k;
                    t["poly"] = p.str();
                    ts.push_back(std::move(t));
                }
                entry["terms"] = std::move(ts);
                structure.push_back(std::move(entry));
            }
            j["structure"] = std::move(structure);
            break;
        }
        case DefKind::Coalgebra:
        case DefKind::JordanCoalgebra: {
            j["rank"] = def.basis.size();
            j["basis"] = def.basis;
            json coproduct = json::array();
            for (const auto& [k, terms] : def.coproduct) {
                json entry;
                entry["k"] = k;
                json ts = json::array();
                for (const auto& [ij, q] : terms) {
                    json t;
                    t["i"] = ij.first;
                    t["j"] = ij.second;
                    t["poly"] = q.str();
                    ts.push_back(std::move(t));
                }
                entry["terms"] = std::move(ts);
                coproduct.push_back(std::move(entry));
            }
            j["coproduct"] = std::move(coproduct);
            break;
        }
        case DefKind::Hom: {
            j["source"] = def.source;
            j["target"] = def.target;
            json rows = json::array();
            for (int i = 0; i < def.hom_matrix.rows(); ++i) {
                json row = json::array();
                for (int k = 0; k < def.hom_matrix.cols(); ++k)
                    row.push_back(def.hom_matrix.at(i, k).str());
                rows.push_back(std::move(row));
            }
            j["matrix"] = std::move(rows);
            break;
        }
        case DefKind::Ideal: {
            j["of"] = def.of;
            json gens = json::array();
            for (const auto& [i, p] : def.ideal_gens) {
                json g;
                g["index"] = i;
                g["poly"] = p.str();
                gens.push_back(std::move(g));
            }
            j["generators"] = std::move(gens);
            break;
        }
        case DefKind::Sequence: {
            json window = json::array();
            for (const auto& p : def.window) window.push_back(p.str());
            j["window"] = std::move(window);
            break;
        }
    }
    return j;
}

Definition definition_from_json_object(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("model JSON must be an object with a 'kind'", 1, 1);
    auto kind = def_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw ParseError("unknown model kind", 1, 1);
    Definition def;
    def.kind = *kind;
    def.name = j.value("name", std::string("model"));
    switch (def.kind) {
        case DefKind::LieAlgebra:
        case DefKind::ConformalAlgebra:
        case DefKind::JordanConformalAlgebra: {
            def.basis = j.at("basis").get<std::vector<std::string>>();
            for (const auto& entry : j.at("structure")) {
                int i = entry.at("i").get<int>();
                int jj = entry.at("j").get<int>();
                for (const auto& t : entry.at("terms")) {
                    Poly p = Poly::parse(t.at("poly").get<std::string>());
                    if (!p.is_zero()) def.structure[{i, jj}][t.at("k").get<int>()] = p;
                }
            }
            break;
        }
        case DefKind::Coalgebra:
        case DefKind::JordanCoalgebra: {
            def.basis = j.at("basis").get<std::vector<std::string>>();
            for (const auto& entry : j.at("coproduct")) {
                int k = entry.at("k").get<int>();
                for (const auto& t : entry.at("terms")) {
                    Poly q = Poly::parse(t.at("poly").get<std::string>());
                    if (!q.is_zero())
                        def.coproduct[k][{t.at("i").get<int>(), t.at("j").get<int>()}] = q;
                }
            }
            break;
        }
        case DefKind::Hom: {
            def.source = j.value("source", "");
            def.target = j.value("target", "");
            const auto& rows = j.at("matrix");
            int r = static_cast<int>(rows.size());
            int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
            def.hom_matrix = PolyMatrix(r, c);
            for (int i = 0; i < r; ++i)
                for (int k = 0; k < c; ++k)
                    def.hom_matrix.at(i, k) =
                        Poly::parse(rows[i][k].get<std::string>());
            break;
        }
        case DefKind::Ideal: {
            def.of = j.value("of", "");
            for (const auto& g : j.at("generators"))
                def.ideal_gens[g.at("index").get<int>()] =
                    Poly::parse(g.at("poly").get<std::string>());
            break;
        }
        case DefKind::Sequence: {
            for (const auto& p : j.at("window"))
                def.window.push_back(Poly::parse(p.get<std::string>()));
            break;
        }
    }
    return def;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON", 1, 1);
    return j;
}

}  // namespace

std::string definitions_to_json(const std::vector<Definition>& defs) {
    if (defs.size() == 1) return definition_to_json_object(defs[0]).dump(2) + "\n";
    json arr = json::array();
    for (const auto& d : defs) arr.push_back(definition_to_json_object(d));
    return arr.dump(2) + "\n";
}

std::vector<Definition> definitions_from_json(const std::string& text) {
    json j = parse_json_text(text);
    std::vector<Definition> defs;
    if (j.is_array()) {
        for (const auto& item : j) defs.push_back(definition_from_json_object(item));
    } else {
        defs.push_back(definition_from_json_object(j));
    }
    return defs;
}

namespace {

std::string poly_to_latex(const Poly& p) {
    static const std::array<std::string, kVarCount> names = {
        "\\lambda", "\\mu",
        "\\nu",     "\\partial",
        "(\\partial\\otimes 1)", "(1\\otimes\\partial)",
        "(1\\otimes 1\\otimes\\partial)", "(1^{\\otimes 3}\\otimes\\partial)"};
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool first = out.empty();
        bool negative = c.num() < 0;
        Rat abs_c = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += " ";
            vars += names[i];
            if (m[i] > 1) vars += "^{" + std::to_string(m[i]) + "}";
        }
        std::string coeff;
        if (abs_c.is_integer()) {
            coeff = abs_c.num().str();
        } else {
            coeff = "\\tfrac{" + abs_c.num().str() + "}{" + abs_c.den().str() + "}";
        }
        if (vars.empty()) {
            out += coeff;
        } else if (abs_c.is_one()) {
            out += vars;
        } else {
            out += coeff + " " + vars;
        }
    }
    return out;
}

std::string name_to_latex(const std::string& name) {
    if (!name.empty() && name.back() == '*')
        return name.substr(0, name.size() - 1) + "^*";
    return name;
}

}  // namespace

std::string definition_to_latex(const Definition& def) {
    std::string out = "% " + std::string(def_kind_name(def.kind)) + " " + def.name + "\n";
    switch (def.kind) {
        case DefKind::LieAlgebra:
        case DefKind::ConformalAlgebra:
        case DefKind::JordanConformalAlgebra:
            for (const auto& [ij, terms] : def.structure) {
                std::string lhs =
                    def.kind == DefKind::LieAlgebra
                        ? "[" + name_to_latex(def.basis[ij.first]) + ", " +
                              name_to_latex(def.basis[ij.second]) + "]"
                        : "[{" + name_to_latex(def.basis[ij.first]) + "}_\\lambda \\, " +
                              name_to_latex(def.basis[ij.second]) + "]";
                std::string rhs;
                for (const auto& [k, p] : terms) {
                    if (!rhs.empty()) rhs += " + ";
                    rhs += "\\left(" + poly_to_latex(p) + "\\right) " +
                           name_to_latex(def.basis[k]);
                }
                out += "\\[ " + lhs + " = " + rhs + " \\]\n";
            }
            break;
        case DefKind::Coalgebra:
        case DefKind::JordanCoalgebra:
            for (const auto& [k, terms] : def.coproduct) {
                std::string rhs;
                for (const auto& [ij, q] : terms) {
                    if (!rhs.empty()) rhs += " + ";
                    rhs += "\\left(" + poly_to_latex(q) + "\\right) " +
                           name_to_latex(def.basis[ij.first]) + " \\otimes " +
                           name_to_latex(def.basis[ij.second]);
                }
                if (rhs.empty()) rhs = "0";
                out += "\\[ \\delta(" + name_to_latex(def.basis[k]) + ") = " + rhs +
                       " \\]\n";
            }
            break;
        default:
            throw InvalidArgument("latex export supports algebra and coalgebra models");
    }
    return out;
}

std::string definition_to_dsl(const Definition& def) {
    std::string out = std::string(def_kind_name(def.kind)) + " " + def.name + " {\n";
    auto join_basis = [&def]() {
        std::string b;
        for (const auto& name : def.basis) {
            if (!b.empty()) b += ", ";
            b += name;
        }
        return b;
    };
    switch (def.kind) {
        case DefKind::LieAlgebra:
        case DefKind::ConformalAlgebra:
        case DefKind::JordanConformalAlgebra: {
            out += "  basis " + join_basis() + ";\n";
            for (const auto& [ij, terms] : def.structure) {
                std::string lhs = def.kind == DefKind::LieAlgebra
                                      ? "[" + def.basis[ij.first] + ", " +
                                            def.basis[ij.second] + "]"
                                      : "[" + def.basis[ij.first] + " lam " +
                                            def.basis[ij.second] + "]";
                std::string rhs;
                for (const auto& [k, p] : terms) {
                    if (!rhs.empty()) rhs += " + ";
                    rhs += "(" + p.str() + ") " + def.basis[k];
                }
                out += "  " + lhs + " = " + rhs + ";\n";
            }
            break;
        }
        case DefKind::Coalgebra:
        case DefKind::JordanCoalgebra: {
            out += "  basis " + join_basis() + ";\n";
            for (const auto& [k, terms] : def.coproduct) {
                std::string rhs;
                for (const auto& [ij, q] : terms) {
                    if (!rhs.empty()) rhs += " + ";
                    rhs += "(" + q.str() + ") " + def.basis[ij.first] + " (x) " +
                           def.basis[ij.second];
                }
                if (rhs.empty()) rhs = "0";
                out += "  delta(" + def.basis[k] + ") = " + rhs + ";\n";
            }
            break;
        }
        case DefKind::Sequence: {
            std::string w;
            for (const auto& p : def.window) {
                if (!w.empty()) w += ", ";
                w += p.str();
            }
            out += "  window " + w + ";\n";
            break;
        }
        case DefKind::Ideal:
        case DefKind::Hom:
            // Homs and ideals reference basis names of other definitions;
            // they round-trip through JSON instead.
            throw InvalidArgument(
                "dsl export supports algebra, coalgebra and sequence models");
    }
    out += "}\n";
    return out;
}

std::string window_to_json(const std::vector<Poly>& window) {
    json arr = json::array();
    for (const auto& p : window) arr.push_back(p.str());
    return arr.dump(2) + "\n";
}

std::vector<Poly> window_from_json(const std::string& text) {
    json j = parse_json_text(text);
    if (!j.is_array()) throw ParseError("sequence window must be a JSON array", 1, 1);
    std::vector<Poly> window;
    for (const auto& p : j) window.push_back(Poly::parse(p.get<std::string>()));
    return window;
}

}  // namespace confal

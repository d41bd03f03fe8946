#include "confal/dsl.hpp"

#include <cctype>

#include "confal/errors.hpp"

namespace confal {

namespace {

constexpr std::array<std::pair<DefKind, std::string_view>, 8> kKindNames = {{
    {DefKind::LieAlgebra, "lie_algebra"},
    {DefKind::ConformalAlgebra, "conformal_algebra"},
    {DefKind::Coalgebra, "coalgebra"},
    {DefKind::JordanConformalAlgebra, "jordan_conformal_algebra"},
    {DefKind::JordanCoalgebra, "jordan_coalgebra"},
    {DefKind::Hom, "hom"},
    {DefKind::Ideal, "ideal"},
    {DefKind::Sequence, "sequence"},
}};

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws_and_comments();
        current_ = Token{Tok::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        current_.line = line_;
        current_.col = col_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ident += take();
            // Dual-basis names may carry one trailing star.
            if (pos_ < text_.size() && text_[pos_] == '*') ident += take();
            current_.kind = Tok::Ident;
            current_.text = std::move(ident);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                num += take();
            current_.kind = Tok::Number;
            current_.text = std::move(num);
            return;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            take();
            take();
            current_.kind = Tok::Punct;
            current_.text = "->";
            return;
        }
        current_.kind = Tok::Punct;
        current_.text = std::string(1, take());
    }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

bool is_poly_var(const std::string& name) { return var_from_name(name).has_value(); }

class DslParser {
public:
    explicit DslParser(std::string_view text) : lex_(text) {}

    std::vector<Definition> parse() {
        std::vector<Definition> defs;
        while (lex_.peek().kind != Tok::End) {
            defs.push_back(parse_definition(defs));
        }
        return defs;
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& at) {
        throw ParseError(msg, at.line, at.col);
    }

    Token expect_punct(const std::string& p) {
        Token t = lex_.next();
        if (t.kind != Tok::Punct || t.text != p)
            fail("expected '" + p + "'", t);
        return t;
    }

    Token expect_ident() {
        Token t = lex_.next();
        if (t.kind != Tok::Ident) fail("expected identifier", t);
        return t;
    }

    Token expect_keyword(const std::string& kw) {
        Token t = lex_.next();
        if (t.kind != Tok::Ident || t.text != kw) fail("expected '" + kw + "'", t);
        return t;
    }

    bool peek_punct(const std::string& p) {
        return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
    }

    bool peek_ident(const std::string& name) {
        return lex_.peek().kind == Tok::Ident && lex_.peek().text == name;
    }

    Definition parse_definition(const std::vector<Definition>& previous) {
        Token kind_tok = expect_ident();
        auto kind = def_kind_from_name(kind_tok.text);
        if (!kind) fail("unknown definition kind '" + kind_tok.text + "'", kind_tok);
        Token name_tok = expect_ident();
        for (const auto& d : previous)
            if (d.name == name_tok.text)
                throw DuplicateName("duplicate definition name '" + name_tok.text + "'",
                                    name_tok.line, name_tok.col);
        Definition def;
        def.kind = *kind;
        def.name = name_tok.text;
        expect_punct("{");
        while (!peek_punct("}")) {
            if (lex_.peek().kind == Tok::End) fail("unterminated block", lex_.peek());
            parse_statement(def, previous);
        }
        expect_punct("}");
        return def;
    }

    void parse_statement(Definition& def, const std::vector<Definition>& previous) {
        switch (def.kind) {
            case DefKind::LieAlgebra:
            case DefKind::ConformalAlgebra:
            case DefKind::JordanConformalAlgebra:
                if (peek_ident("basis")) return parse_basis(def);
                if (peek_punct("[")) return parse_bracket(def);
                fail("expected 'basis' or a bracket statement", lex_.peek());
            case DefKind::Coalgebra:
            case DefKind::JordanCoalgebra:
                if (peek_ident("basis")) return parse_basis(def);
                if (peek_ident("delta")) return parse_delta(def);
                fail("expected 'basis' or 'delta'", lex_.peek());
            case DefKind::Hom:
                return parse_hom_statement(def, previous);
            case DefKind::Ideal:
                return parse_ideal_statement(def, previous);
            case DefKind::Sequence:
                return parse_sequence_statement(def);
        }
        fail("unhandled statement", lex_.peek());
    }

    static bool is_statement_keyword(const std::string& s) {
        return s == "basis" || s == "delta" || s == "source" || s == "target" ||
               s == "map" || s == "of" || s == "window" || s == "lam";
    }

    void parse_basis(Definition& def) {
        expect_keyword("basis");
        while (true) {
            Token t = expect_ident();
            if (is_poly_var(t.text))
                fail("basis symbol '" + t.text + "' shadows a polynomial variable", t);
            if (is_statement_keyword(t.text))
                fail("basis symbol '" + t.text + "' is a reserved keyword", t);
            for (const auto& existing : def.basis)
                if (existing == t.text)
                    throw DuplicateName("duplicate basis symbol '" + t.text + "'",
                                        t.line, t.col);
            def.basis.push_back(t.text);
            if (peek_punct(",")) {
                lex_.next();
                continue;
            }
            break;
        }
        expect_punct(";");
    }

    int basis_index(const Definition& def, const Token& t) const {
        for (std::size_t i = 0; i < def.basis.size(); ++i)
            if (def.basis[i] == t.text) return static_cast<int>(i);
        throw UnknownBasisSymbol("unknown basis symbol '" + t.text + "'", t.line,
                                 t.col);
    }

    /// Polynomial expression over the closed variable alphabet; stops in
    /// front of identifiers that are not polynomial variables.
    Poly parse_poly_expr() {
        Poly p = parse_poly_term(true);
        while (true) {
            if (peek_punct("+")) {
                lex_.next();
                p += parse_poly_term(false);
            } else if (peek_punct("-")) {
                lex_.next();
                p -= parse_poly_term(false);
            } else {
                return p;
            }
        }
    }

    Poly parse_poly_term(bool allow_sign) {
        bool negate = false;
        while (allow_sign && (peek_punct("-") || peek_punct("+"))) {
            if (lex_.next().text == "-") negate = !negate;
        }
        Poly p = parse_poly_factor();
        while (poly_atom_ahead()) {
            if (peek_punct("*")) lex_.next();
            p *= parse_poly_factor();
        }
        return negate ? -p : p;
    }

    bool poly_atom_ahead() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Number) return true;
        if (t.kind == Tok::Ident) return is_poly_var(t.text);
        if (t.kind == Tok::Punct && (t.text == "(" || t.text == "*")) return true;
        return false;
    }

    Poly parse_poly_factor() {
        Poly base = parse_poly_atom();
        if (peek_punct("^")) {
            lex_.next();
            Token e = lex_.next();
            if (e.kind != Tok::Number) fail("expected integer exponent", e);
            base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Poly parse_poly_atom() {
        Token t = lex_.next();
        if (t.kind == Tok::Number) {
            BigInt num(t.text);
            // A '/' directly after digits continues a rational literal.
            if (peek_punct("/")) {
                lex_.next();
                Token den = lex_.next();
                if (den.kind != Tok::Number) fail("expected denominator", den);
                return Poly::constant(Rat(num, BigInt(den.text)));
            }
            return Poly::constant(Rat(std::move(num)));
        }
        if (t.kind == Tok::Ident) {
            auto v = var_from_name(t.text);
            if (!v) fail("'" + t.text + "' is not a polynomial variable", t);
            return Poly::variable(*v);
        }
        if (t.kind == Tok::Punct && t.text == "(") {
            Poly p = parse_poly_expr();
            expect_punct(")");
            return p;
        }
        if (t.kind == Tok::Punct && t.text == "-") return -parse_poly_atom();
        fail("expected polynomial atom", t);
    }

    /// Optional sign chain and optional coefficient polynomial, stopping in
    /// front of a basis identifier.
    Poly parse_signed_coeff() {
        bool negate = false;
        while (peek_punct("-") || peek_punct("+"))
            if (lex_.next().text == "-") negate = !negate;
        Poly coeff = Poly::constant(Rat(1));
        const Token& look = lex_.peek();
        if (!(look.kind == Tok::Ident && !is_poly_var(look.text)))
            coeff = parse_poly_term(false);
        return negate ? -coeff : coeff;
    }

    /// RHS of a bracket statement: linear combination `poly NAME (+ ...)`,
    /// or the literal 0.
    std::map<int, Poly> parse_linear_rhs(const Definition& def, VarSet allowed,
                                         const char* what) {
        std::map<int, Poly> out;
        if (lex_.peek().kind == Tok::Number && lex_.peek().text == "0") {
            lex_.next();
            if (!peek_punct(";")) fail("expected ';' after zero", lex_.peek());
            return out;
        }
        bool join_negate = false;
        while (true) {
            Poly coeff = parse_signed_coeff();
            if (join_negate) coeff = -coeff;
            Token base = expect_ident();
            if (is_poly_var(base.text))
                fail("expected basis symbol, found variable '" + base.text + "'", base);
            if (!coeff.uses_only(allowed))
                fail(std::string(what) + " coefficient uses a forbidden variable", base);
            int idx = basis_index(def, base);
            Poly& slot = out[idx];
            slot += coeff;
            if (slot.is_zero()) out.erase(idx);
            if (peek_punct("+")) {
                lex_.next();
                join_negate = false;
                continue;
            }
            if (peek_punct("-")) {
                lex_.next();
                join_negate = true;
                continue;
            }
            break;
        }
        return out;
    }

    void parse_bracket(Definition& def) {
        Token open = expect_punct("[");
        Token left = expect_ident();
        int i = basis_index(def, left);
        int j;
        if (def.kind == DefKind::LieAlgebra) {
            expect_punct(",");
            j = basis_index(def, expect_ident());
        } else {
            expect_keyword("lam");
            j = basis_index(def, expect_ident());
        }
        expect_punct("]");
        expect_punct("=");
        VarSet allowed =
            def.kind == DefKind::LieAlgebra ? VarSet{0} : kVarsLamD;
        auto rhs = parse_linear_rhs(def, allowed, "bracket");
        expect_punct(";");
        if (def.structure.count({i, j}))
            fail("bracket already defined for this pair", open);
        if (!rhs.empty()) def.structure[{i, j}] = std::move(rhs);
    }

    void parse_delta(Definition& def) {
        expect_keyword("delta");
        expect_punct("(");
        Token base = expect_ident();
        int k = basis_index(def, base);
        expect_punct(")");
        expect_punct("=");
        std::map<std::pair<int, int>, Poly> terms;
        if (lex_.peek().kind == Tok::Number && lex_.peek().text == "0") {
            lex_.next();
        } else {
            bool join_negate = false;
            while (true) {
                Poly coeff = parse_signed_coeff();
                if (join_negate) coeff = -coeff;
                if (!coeff.uses_only(kVarsXY))
                    fail("coproduct coefficient must lie in C[x, y]", lex_.peek());
                Token first = expect_ident();
                int i = basis_index(def, first);
                // tensor marker '(x)'
                expect_punct("(");
                Token x_tok = expect_ident();
                if (x_tok.text != "x") fail("expected tensor marker '(x)'", x_tok);
                expect_punct(")");
                Token second = expect_ident();
                int jj = basis_index(def, second);
                Poly& slot = terms[{i, jj}];
                slot += coeff;
                if (slot.is_zero()) terms.erase({i, jj});
                if (peek_punct("+")) {
                    lex_.next();
                    join_negate = false;
                    continue;
                }
                if (peek_punct("-")) {
                    lex_.next();
                    join_negate = true;
                    continue;
                }
                break;
            }
        }
        expect_punct(";");
        if (def.coproduct.count(k)) fail("coproduct already defined for '" + base.text + "'", base);
        if (!terms.empty()) def.coproduct[k] = std::move(terms);
    }

    const Definition& find_definition(const std::vector<Definition>& previous,
                                      const Token& name) const {
        for (const auto& d : previous)
            if (d.name == name.text) return d;
        throw UnknownBasisSymbol("reference to undefined name '" + name.text + "'",
                                 name.line, name.col);
    }

    void parse_hom_statement(Definition& def, const std::vector<Definition>& previous) {
        if (peek_ident("source")) {
            lex_.next();
            Token t = expect_ident();
            def.source = find_definition(previous, t).name;
            expect_punct(";");
            return;
        }
        if (peek_ident("target")) {
            lex_.next();
            Token t = expect_ident();
            def.target = find_definition(previous, t).name;
            expect_punct(";");
            return;
        }
        if (peek_ident("map")) {
            Token map_tok = lex_.next();
            if (def.source.empty() || def.target.empty())
                fail("'source' and 'target' must precede 'map'", map_tok);
            const Definition& src = find_by_name(previous, def.source);
            const Definition& dst = find_by_name(previous, def.target);
            if (def.hom_matrix.rows() == 0)
                def.hom_matrix = PolyMatrix(static_cast<int>(src.basis.size()),
                                            static_cast<int>(dst.basis.size()));
            Token from = expect_ident();
            int i = basis_index(src, from);
            expect_punct("=");
            auto rhs = parse_linear_rhs(dst, kVarsD, "hom");
            expect_punct(";");
            for (const auto& [k, p] : rhs) def.hom_matrix.at(i, k) = p;
            return;
        }
        fail("expected 'source', 'target' or 'map'", lex_.peek());
    }

    const Definition& find_by_name(const std::vector<Definition>& previous,
                                   const std::string& name) const {
        for (const auto& d : previous)
            if (d.name == name) return d;
        throw InvalidArgument("dangling definition reference");
    }

    void parse_ideal_statement(Definition& def,
                               const std::vector<Definition>& previous) {
        if (peek_ident("of")) {
            lex_.next();
            Token t = expect_ident();
            def.of = find_definition(previous, t).name;
            expect_punct(";");
            return;
        }
        Token line = expect_ident();
        if (def.of.empty()) fail("'of' must precede generator lines", line);
        const Definition& host = find_by_name(previous, def.of);
        int i = basis_index(host, line);
        expect_punct(":");
        Poly gen = parse_poly_expr();
        expect_punct(";");
        if (!gen.uses_only(kVarsD)) fail("ideal generator must lie in C[d]", line);
        if (gen.is_zero()) fail("ideal generator must be nonzero", line);
        def.ideal_gens[i] = std::move(gen);
    }

    void parse_sequence_statement(Definition& def) {
        expect_keyword("window");
        while (true) {
            Poly entry = parse_poly_expr();
            if (!entry.uses_only(kVarsLam))
                fail("window entries must lie in C[lam]", lex_.peek());
            def.window.push_back(std::move(entry));
            if (peek_punct(",")) {
                lex_.next();
                continue;
            }
            break;
        }
        expect_punct(";");
    }

    Lexer lex_;
};

ConformalStructure to_structure(const Definition& def) {
    ConformalStructure s;
    s.basis = def.basis;
    for (const auto& [ij, terms] : def.structure)
        for (const auto& [k, p] : terms) s.set_entry(ij.first, ij.second, k, p);
    return s;
}

CoalgebraStructure to_costructure(const Definition& def) {
    CoalgebraStructure s;
    s.basis = def.basis;
    for (const auto& [k, terms] : def.coproduct)
        for (const auto& [ij, q] : terms) s.set_entry(k, ij.first, ij.second, q);
    return s;
}

}  // namespace

std::string_view def_kind_name(DefKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "unknown";
}

std::optional<DefKind> def_kind_from_name(std::string_view name) {
    for (const auto& [kind, kname] : kKindNames)
        if (kname == name) return kind;
    return std::nullopt;
}

std::vector<Definition> parse_dsl(std::string_view text) {
    return DslParser(text).parse();
}

LieConformalAlgebra to_conformal(const Definition& def) {
    if (def.kind != DefKind::ConformalAlgebra && def.kind != DefKind::LieAlgebra)
        throw InvalidArgument("definition is not a conformal algebra");
    return LieConformalAlgebra::make(to_structure(def));
}

DiffLieCoalgebra to_coalgebra(const Definition& def) {
    if (def.kind != DefKind::Coalgebra)
        throw InvalidArgument("definition is not a coalgebra");
    return DiffLieCoalgebra::make(to_costructure(def));
}

JordanConformalAlgebra to_jordan(const Definition& def) {
    if (def.kind != DefKind::JordanConformalAlgebra &&
        def.kind != DefKind::ConformalAlgebra)
        throw InvalidArgument("definition is not a Jordan conformal algebra");
    return JordanConformalAlgebra::make(to_structure(def));
}

DiffJordanCoalgebra to_jordan_coalgebra(const Definition& def) {
    if (def.kind != DefKind::JordanCoalgebra && def.kind != DefKind::Coalgebra)
        throw InvalidArgument("definition is not a Jordan coalgebra");
    return DiffJordanCoalgebra::make(to_costructure(def));
}

DiagonalIdeal to_ideal(const Definition& def) {
    if (def.kind != DefKind::Ideal) throw InvalidArgument("definition is not an ideal");
    DiagonalIdeal I;
    I.gens = def.ideal_gens;
    return I;
}

Definition definition_of(const LieConformalAlgebra& L, std::string name) {
    Definition def;
    def.kind = DefKind::ConformalAlgebra;
    def.name = std::move(name);
    def.basis = L.basis_names();
    for (const auto& [ij, terms] : L.data().table) def.structure[ij] = terms;
    return def;
}

Definition definition_of(const DiffLieCoalgebra& C, std::string name) {
    Definition def;
    def.kind = DefKind::Coalgebra;
    def.name = std::move(name);
    def.basis = C.basis_names();
    for (const auto& [k, terms] : C.data().table) def.coproduct[k] = terms;
    return def;
}

Definition definition_of(const JordanConformalAlgebra& J, std::string name) {
    Definition def;
    def.kind = DefKind::JordanConformalAlgebra;
    def.name = std::move(name);
    def.basis = J.basis_names();
    for (const auto& [ij, terms] : J.data().table) def.structure[ij] = terms;
    return def;
}

Definition definition_of(const DiffJordanCoalgebra& C, std::string name) {
    Definition def;
    def.kind = DefKind::JordanCoalgebra;
    def.name = std::move(name);
    def.basis = C.basis_names();
    for (const auto& [k, terms] : C.data().table) def.coproduct[k] = terms;
    return def;
}

Definition definition_of(const LieAlgebraSC& g, std::string name) {
    Definition def;
    def.kind = DefKind::LieAlgebra;
    def.name = std::move(name);
    def.basis = g.basis;
    for (const auto& [ij, terms] : g.brackets)
        for (const auto& [k, c] : terms)
            def.structure[ij][k] = Poly::constant(c);
    return def;
}

}  // namespace confal

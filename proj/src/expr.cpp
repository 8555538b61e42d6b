#include "cls/expr.hpp"

#include <cctype>

namespace cls {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return tok_; }

    void advance() {
        skip_ws();
        tok_.pos = pos_;
        if (i_ >= text_.size()) {
            tok_ = {Tok::End, "", pos_};
            return;
        }
        char ch = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) digits += take();
            tok_ = {Tok::Number, digits, tok_.pos};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name(1, take());
            // Identifiers are single letters; a longer run is one unknown name.
            while (i_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i_]))) name += take();
            tok_ = {Tok::Ident, name, tok_.pos};
            return;
        }
        switch (ch) {
            case '+': take(); tok_ = {Tok::Plus, "+", tok_.pos}; return;
            case '-': take(); tok_ = {Tok::Minus, "-", tok_.pos}; return;
            case '*': take(); tok_ = {Tok::Star, "*", tok_.pos}; return;
            case '^': take(); tok_ = {Tok::Caret, "^", tok_.pos}; return;
            case '/': take(); tok_ = {Tok::Slash, "/", tok_.pos}; return;
            case '(': take(); tok_ = {Tok::LParen, "(", tok_.pos}; return;
            case ')': take(); tok_ = {Tok::RParen, ")", tok_.pos}; return;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch + "'", pos_.line, pos_.col);
        }
    }

private:
    char take() {
        char ch = text_[i_++];
        if (ch == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        return ch;
    }
    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) take();
    }

    const std::string& text_;
    size_t i_ = 0;
    SourcePos pos_;
    Token tok_;
};

bool lookup_var(const std::string& name, VarId& out) {
    if (name.size() != 1) return false;
    switch (name[0]) {
        case 'd': out = VarId::Del; return true;
        case 'u': out = VarId::Lam1; return true;
        case 'v': out = VarId::Lam2; return true;
        case 'w': out = VarId::Lam3; return true;
        case 'a': out = VarId::ParA; return true;
        case 'b': out = VarId::ParB; return true;
        case 'c': out = VarId::ParC; return true;
        default: return false;
    }
}

bool is_atom_name(const std::string& name) {
    return name == "L" || name == "G" || name == "x" || name == "y";
}

class Parser {
public:
    Parser(const std::string& text, bool atoms_allowed) : lex_(text), atoms_allowed_(atoms_allowed) {}

    SourceExpr parse_top() {
        SourceExpr e = parse_sum();
        if (lex_.current().kind != Tok::End)
            throw SyntaxError("unexpected trailing input", lex_.current().pos.line, lex_.current().pos.col);
        return e;
    }

private:
    SourceExpr parse_sum() {
        SourcePos pos = lex_.current().pos;
        SourceExpr lhs;
        if (lex_.current().kind == Tok::Plus) {
            lex_.advance();
            lhs = parse_term();
        } else if (lex_.current().kind == Tok::Minus) {
            lex_.advance();
            lhs = node(SourceExpr::Kind::Neg, pos, {parse_term()});
        } else {
            lhs = parse_term();
        }
        while (lex_.current().kind == Tok::Plus || lex_.current().kind == Tok::Minus) {
            bool plus = lex_.current().kind == Tok::Plus;
            SourcePos op_pos = lex_.current().pos;
            lex_.advance();
            SourceExpr rhs = parse_term();
            lhs = node(plus ? SourceExpr::Kind::Add : SourceExpr::Kind::Sub, op_pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    SourceExpr parse_term() {
        SourceExpr lhs = parse_factor();
        while (lex_.current().kind == Tok::Star) {
            SourcePos op_pos = lex_.current().pos;
            lex_.advance();
            SourceExpr rhs = parse_factor();
            lhs = node(SourceExpr::Kind::Mul, op_pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    SourceExpr parse_factor() {
        SourceExpr base = parse_primary();
        while (lex_.current().kind == Tok::Caret) {
            SourcePos op_pos = lex_.current().pos;
            lex_.advance();
            int e = parse_int("exponent");
            SourceExpr p = node(SourceExpr::Kind::Pow, op_pos, {std::move(base)});
            p.exponent = e;
            base = std::move(p);
        }
        return base;
    }

    SourceExpr parse_primary() {
        const Token tok = lex_.current();
        switch (tok.kind) {
            case Tok::Number: {
                lex_.advance();
                std::string text = tok.text;
                if (lex_.current().kind == Tok::Slash) {
                    lex_.advance();
                    const Token den = lex_.current();
                    if (den.kind != Tok::Number)
                        throw SyntaxError("expected denominator digits", den.pos.line, den.pos.col);
                    if (den.text.find_first_not_of('0') == std::string::npos)
                        throw SyntaxError("zero denominator", den.pos.line, den.pos.col);
                    text += "/" + den.text;
                    lex_.advance();
                }
                SourceExpr e = node(SourceExpr::Kind::Number, tok.pos, {});
                e.number = Rational::from_string(text);
                return e;
            }
            case Tok::Ident: {
                VarId v;
                if (lookup_var(tok.text, v)) {
                    lex_.advance();
                    SourceExpr e = node(SourceExpr::Kind::Var, tok.pos, {});
                    e.var = v;
                    return e;
                }
                if (is_atom_name(tok.text)) {
                    if (!atoms_allowed_)
                        throw UnknownIdentifier("'" + tok.text + "' is not a polynomial variable", tok.pos.line,
                                                tok.pos.col);
                    return parse_atom();
                }
                throw UnknownIdentifier("unknown identifier '" + tok.text + "'", tok.pos.line, tok.pos.col);
            }
            case Tok::LParen: {
                lex_.advance();
                SourceExpr inner = parse_sum();
                expect(Tok::RParen, ")");
                return inner;
            }
            default:
                throw SyntaxError("expected a factor", tok.pos.line, tok.pos.col);
        }
    }

    SourceExpr parse_atom() {
        const Token tok = lex_.current();
        lex_.advance();
        SourceExpr e = node(SourceExpr::Kind::Atom, tok.pos, {});
        e.atom_kind = tok.text[0];
        bool needs_grade = tok.text == "L" || tok.text == "G";
        if (lex_.current().kind == Tok::LParen) {
            lex_.advance();
            e.atom_grade = parse_int("grade index");
            expect(Tok::RParen, ")");
        } else if (needs_grade) {
            throw SyntaxError("generator '" + tok.text + "' requires a grade index", tok.pos.line, tok.pos.col);
        }
        return e;
    }

    int parse_int(const char* what) {
        bool neg = false;
        if (lex_.current().kind == Tok::Minus) {
            neg = true;
            lex_.advance();
        }
        const Token tok = lex_.current();
        if (tok.kind != Tok::Number) throw SyntaxError(std::string("expected ") + what, tok.pos.line, tok.pos.col);
        lex_.advance();
        long value = 0;
        try {
            value = std::stol(tok.text);
        } catch (const std::exception&) {
            value = 1000001;
        }
        if (value > 1000000) throw SyntaxError(std::string(what) + " out of range", tok.pos.line, tok.pos.col);
        return static_cast<int>(neg ? -value : value);
    }

    void expect(Tok kind, const char* what) {
        const Token& tok = lex_.current();
        if (tok.kind != kind) throw SyntaxError(std::string("expected '") + what + "'", tok.pos.line, tok.pos.col);
        lex_.advance();
    }

    static SourceExpr node(SourceExpr::Kind kind, SourcePos pos, std::vector<SourceExpr> kids) {
        SourceExpr e;
        e.kind = kind;
        e.pos = pos;
        e.kids = std::move(kids);
        return e;
    }

    Lexer lex_;
    bool atoms_allowed_;
};

Poly eval_poly(const SourceExpr& e) {
    switch (e.kind) {
        case SourceExpr::Kind::Number: return Poly(e.number);
        case SourceExpr::Kind::Var: return Poly::variable(e.var);
        case SourceExpr::Kind::Neg: return -eval_poly(e.kids[0]);
        case SourceExpr::Kind::Add: return eval_poly(e.kids[0]) + eval_poly(e.kids[1]);
        case SourceExpr::Kind::Sub: return eval_poly(e.kids[0]) - eval_poly(e.kids[1]);
        case SourceExpr::Kind::Mul: return eval_poly(e.kids[0]) * eval_poly(e.kids[1]);
        case SourceExpr::Kind::Pow: {
            if (e.exponent < 0) {
                const SourceExpr& base = e.kids[0];
                if (base.kind != SourceExpr::Kind::Var || base.var != VarId::ParC)
                    throw IllegalExponent("negative exponent is only legal on c", e.pos.line, e.pos.col);
                return Poly::term(Monomial::var(VarId::ParC, e.exponent), Rational(1));
            }
            return eval_poly(e.kids[0]).pow(e.exponent);
        }
        case SourceExpr::Kind::Atom:
            throw WrongContext("basis atom in polynomial context", e.pos.line, e.pos.col);
    }
    throw Error("unreachable");
}

struct ElementTerm {
    Poly coeff;
    const SourceExpr* atom;  // null when the term is a bare polynomial
    SourcePos pos;
};

// Flattens the +/- structure; each term must be (coeffs "*")* atom.
void collect_terms(const SourceExpr& e, int sign, std::vector<std::pair<const SourceExpr*, int>>& out) {
    switch (e.kind) {
        case SourceExpr::Kind::Add:
            collect_terms(e.kids[0], sign, out);
            collect_terms(e.kids[1], sign, out);
            return;
        case SourceExpr::Kind::Sub:
            collect_terms(e.kids[0], sign, out);
            collect_terms(e.kids[1], -sign, out);
            return;
        case SourceExpr::Kind::Neg:
            collect_terms(e.kids[0], -sign, out);
            return;
        default:
            out.emplace_back(&e, sign);
    }
}

void collect_factors(const SourceExpr& e, std::vector<const SourceExpr*>& out) {
    if (e.kind == SourceExpr::Kind::Mul) {
        collect_factors(e.kids[0], out);
        collect_factors(e.kids[1], out);
        return;
    }
    out.push_back(&e);
}

std::vector<ElementTerm> element_terms(const SourceExpr& root) {
    std::vector<std::pair<const SourceExpr*, int>> raw;
    collect_terms(root, 1, raw);
    std::vector<ElementTerm> out;
    for (auto [term, sign] : raw) {
        std::vector<const SourceExpr*> factors;
        collect_factors(*term, factors);
        ElementTerm et;
        et.pos = term->pos;
        et.atom = nullptr;
        Poly coeff(sign);
        for (size_t i = 0; i < factors.size(); ++i) {
            if (factors[i]->kind == SourceExpr::Kind::Atom) {
                if (et.atom != nullptr)
                    throw SyntaxError("more than one basis atom in a term", factors[i]->pos.line,
                                      factors[i]->pos.col);
                if (i + 1 != factors.size())
                    throw SyntaxError("basis atom must end its term", factors[i]->pos.line, factors[i]->pos.col);
                et.atom = factors[i];
            } else {
                coeff *= eval_poly(*factors[i]);
            }
        }
        et.coeff = std::move(coeff);
        out.push_back(std::move(et));
    }
    return out;
}

void require_lambda_free(const Poly& p) {
    if (p.contains_lambda_var())
        throw LambdaVariableForbidden("lambda variables (u, v, w) may not appear in element coefficients");
}

// ---- printing ----

void append_signed(std::string& out, bool first, int sign) {
    if (first) {
        if (sign < 0) out += "-";
    } else {
        out += sign < 0 ? " - " : " + ";
    }
}

std::string print_monomial(const Monomial& m, const Rational& coeff_mag) {
    std::string out;
    bool have_factor = false;
    if (!coeff_mag.is_one() || m.is_one()) {
        out += coeff_mag.str();
        have_factor = true;
    }
    for (int i = 0; i < kVarCount; ++i) {
        VarId v = static_cast<VarId>(i);
        int e = m.exponent(v);
        if (e == 0) continue;
        if (have_factor) out += "*";
        out += var_name(v);
        if (e != 1) out += "^" + std::to_string(e);
        have_factor = true;
    }
    return out;
}

template <typename Id>
std::string print_support(const std::map<Id, Poly>& support, std::string (*name)(const Id&)) {
    if (support.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [id, coeff] : support) {
        int sign = 1;
        std::string piece;
        if (coeff.is_constant()) {
            Rational c = coeff.constant_value();
            sign = c.sign();
            Rational mag = sign < 0 ? -c : c;
            piece = mag.is_one() ? name(id) : mag.str() + "*" + name(id);
        } else if (coeff.term_count() == 1) {
            const auto& [m, c] = *coeff.terms().begin();
            sign = c.sign();
            piece = print_monomial(m, sign < 0 ? -c : c) + "*" + name(id);
        } else {
            piece = "(" + print_poly(coeff) + ")*" + name(id);
        }
        append_signed(out, first, sign);
        out += piece;
        first = false;
    }
    return out;
}

std::string gen_name_ptr(const GenId& g) { return gen_name(g); }
std::string basis_name_ptr(const BasisId& b) { return basis_name(b); }

}  // namespace

SourceExpr parse_source(const std::string& text) { return Parser(text, true).parse_top(); }

Poly parse_poly(const std::string& text) { return eval_poly(Parser(text, false).parse_top()); }

AlgebraElement parse_algebra_element(const std::string& text) {
    SourceExpr root = Parser(text, true).parse_top();
    AlgebraElement result;
    for (const auto& term : element_terms(root)) {
        if (term.atom == nullptr) {
            if (term.coeff.is_zero()) continue;
            throw SyntaxError("expected a generator atom", term.pos.line, term.pos.col);
        }
        char k = term.atom->atom_kind;
        if (k != 'L' && k != 'G')
            throw WrongContext("module atom in algebra expression", term.atom->pos.line, term.atom->pos.col);
        require_lambda_free(term.coeff);
        result.add(GenId{k == 'L' ? GenKind::L : GenKind::G, *term.atom->atom_grade}, term.coeff);
    }
    return result;
}

ModuleElement parse_module_element(const std::string& text) {
    SourceExpr root = Parser(text, true).parse_top();
    ModuleElement result;
    std::optional<bool> graded;
    for (const auto& term : element_terms(root)) {
        if (term.atom == nullptr) {
            if (term.coeff.is_zero()) continue;
            throw SyntaxError("expected a basis atom", term.pos.line, term.pos.col);
        }
        char k = term.atom->atom_kind;
        if (k != 'x' && k != 'y')
            throw WrongContext("algebra atom in module expression", term.atom->pos.line, term.atom->pos.col);
        require_lambda_free(term.coeff);
        bool has_grade = term.atom->atom_grade.has_value();
        if (graded.has_value() && *graded != has_grade)
            throw SyntaxError("graded and ungraded basis atoms mixed", term.atom->pos.line, term.atom->pos.col);
        graded = has_grade;
        result.add(BasisId{k == 'x' ? BasisKind::x : BasisKind::y, term.atom->atom_grade}, term.coeff);
    }
    return result;
}

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // Highest terms first.
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        int sign = c.sign();
        append_signed(out, first, sign);
        out += print_monomial(m, sign < 0 ? -c : c);
        first = false;
    }
    return out;
}

std::string print_element(const std::map<GenId, Poly>& support) { return print_support(support, gen_name_ptr); }
std::string print_element(const std::map<BasisId, Poly>& support) { return print_support(support, basis_name_ptr); }

std::string print_algebra_element(const AlgebraElement& e) { return print_element(e.support()); }
std::string print_module_element(const ModuleElement& e) { return print_element(e.support()); }
std::string print_lambda_valued(const LambdaValued& v) { return print_element(v.support()); }
std::string print_lambda_module_element(const LambdaModuleElement& v) { return print_element(v.support()); }

}  // namespace cls

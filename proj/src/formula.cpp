#include "stmodal/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace stmodal {

Formula Formula::make(Op op, std::string name, std::vector<Formula> kids) {
    return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(kids)}));
}

Formula Formula::top() { return make(Op::Top, {}, {}); }
Formula Formula::bottom() { return make(Op::Bottom, {}, {}); }
Formula Formula::atom(std::string name) {
    if (!is_identifier(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
    return make(Op::Atom, std::move(name), {});
}
Formula Formula::negation(Formula f) { return make(Op::Not, {}, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::And, {}, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::Or, {}, {std::move(a), std::move(b)}); }
Formula Formula::implies(Formula a, Formula b) { return make(Op::Implies, {}, {std::move(a), std::move(b)}); }
Formula Formula::iff(Formula a, Formula b) { return make(Op::Iff, {}, {std::move(a), std::move(b)}); }
Formula Formula::box(Formula f) { return make(Op::Box, {}, {std::move(f)}); }
Formula Formula::diamond(Formula f) { return make(Op::Diamond, {}, {std::move(f)}); }

std::size_t Formula::size() const {
    std::size_t n = 1;
    for (const auto& k : children()) n += k.size();
    return n;
}

std::size_t Formula::modal_depth() const {
    std::size_t d = 0;
    for (const auto& k : children()) d = std::max(d, k.modal_depth());
    return (op() == Op::Box || op() == Op::Diamond) ? d + 1 : d;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.name() != b.name() || a.children().size() != b.children().size()) return false;
    for (std::size_t i = 0; i < a.children().size(); ++i)
        if (!(a.children()[i] == b.children()[i])) return false;
    return true;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

static void collect_atoms(const Formula& f, std::set<std::string>& out) {
    if (f.op() == Op::Atom) out.insert(f.name());
    for (const auto& k : f.children()) collect_atoms(k, out);
}

std::set<std::string> atoms(const Formula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(Op op) {
    switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Not:
    case Op::Box:
    case Op::Diamond: return 5;
    default: return 6;
    }
}

void print_into(const Formula& f, int required, std::string& out) {
    const int p = precedence(f.op());
    const bool wrap = p < required;
    if (wrap) out += '(';
    auto binary = [&](std::string_view sym, int lreq, int rreq) {
        print_into(f.lhs(), lreq, out);
        out += sym;
        print_into(f.rhs(), rreq, out);
    };
    switch (f.op()) {
    case Op::Top: out += 'T'; break;
    case Op::Bottom: out += 'F'; break;
    case Op::Atom: out += f.name(); break;
    case Op::Not: out += '~'; print_into(f.operand(), 5, out); break;
    case Op::Box: out += "[]"; print_into(f.operand(), 5, out); break;
    case Op::Diamond: out += "<>"; print_into(f.operand(), 5, out); break;
    case Op::And: binary(" & ", 4, 5); break;
    case Op::Or: binary(" | ", 3, 4); break;
    case Op::Implies: binary(" -> ", 3, 2); break;
    case Op::Iff: binary(" <-> ", 1, 2); break;
    }
    if (wrap) out += ')';
}

} // namespace

std::string print(const Formula& f) {
    std::string out;
    print_into(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

enum class Tok { Not, Box, Dia, And, Or, Imp, Iff, LParen, RParen, True, False, Ident, AxiomRef, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

const std::vector<std::string> kUnaryStart{"~", "[]", "<>", "T", "F", "identifier", "@axiom", "("};
const std::vector<std::string> kBinaryOps{"&", "|", "->", "<->"};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    Formula parse_all() {
        Formula f = parse_iff();
        if (cur_.kind != Tok::End) fail(with(kBinaryOps, "end of input"));
        return f;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw SyntaxError(cur_.offset, std::move(expected), cur_.kind == Tok::End ? "end of input" : cur_.text);
    }

    static std::vector<std::string> with(std::vector<std::string> v, std::string extra) {
        v.push_back(std::move(extra));
        return v;
    }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            cur_ = {Tok::End, start, ""};
            return;
        }
        auto take = [&](Tok k, std::size_t len) {
            cur_ = {k, start, std::string(text_.substr(start, len))};
            pos_ += len;
        };
        auto starts = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
        const char c = text_[pos_];
        if (c == '~') return take(Tok::Not, 1);
        if (c == '&') return take(Tok::And, 1);
        if (c == '|') return take(Tok::Or, 1);
        if (c == '(') return take(Tok::LParen, 1);
        if (c == ')') return take(Tok::RParen, 1);
        if (starts("[]")) return take(Tok::Box, 2);
        if (starts("<>")) return take(Tok::Dia, 2);
        if (starts("<->")) return take(Tok::Iff, 3);
        if (starts("->")) return take(Tok::Imp, 2);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '@') {
            std::size_t end = pos_ + 1;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            const std::string word(text_.substr(start, end - start));
            Tok k = Tok::Ident;
            if (c == '@') k = Tok::AxiomRef;
            else if (word == "T") k = Tok::True;
            else if (word == "F") k = Tok::False;
            return take(k, end - start);
        }
        cur_ = {Tok::End, start, std::string(1, c)};
        throw SyntaxError(start, with(with(kUnaryStart, ")"), "binary connective"), std::string(1, c));
    }

    Formula parse_iff() {
        Formula f = parse_imp();
        while (cur_.kind == Tok::Iff) {
            advance();
            f = Formula::iff(f, parse_imp());
        }
        return f;
    }

    Formula parse_imp() {
        Formula f = parse_or();
        if (cur_.kind == Tok::Imp) {
            advance();
            return Formula::implies(f, parse_imp());
        }
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (cur_.kind == Tok::Or) {
            advance();
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (cur_.kind == Tok::And) {
            advance();
            f = Formula::conj(f, parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        switch (cur_.kind) {
        case Tok::Not: advance(); return Formula::negation(parse_unary());
        case Tok::Box: advance(); return Formula::box(parse_unary());
        case Tok::Dia: advance(); return Formula::diamond(parse_unary());
        default: return parse_atom();
        }
    }

    Formula parse_atom() {
        switch (cur_.kind) {
        case Tok::True: advance(); return Formula::top();
        case Tok::False: advance(); return Formula::bottom();
        case Tok::Ident: {
            Formula f = Formula::atom(cur_.text);
            advance();
            return f;
        }
        case Tok::AxiomRef: {
            AxiomName a{};
            try {
                a = axiom_from_string(cur_.text);
            } catch (const std::invalid_argument&) {
                fail({"axiom name"});
            }
            advance();
            return axiom(a);
        }
        case Tok::LParen: {
            advance();
            Formula f = parse_iff();
            if (cur_.kind != Tok::RParen) fail(with(kBinaryOps, ")"));
            advance();
            return f;
        }
        default: fail(kUnaryStart);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token cur_{Tok::End, 0, ""};
};

} // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": found '" + found +
                         "', expected one of: " + join(expected)),
      offset_(offset), expected_(std::move(expected)) {}

Formula parse_formula(std::string_view text) {
    bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) throw SyntaxError(0, kUnaryStart, "end of input");
    return Parser(text).parse_all();
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

constexpr std::string_view kTwoOfThree = "<>(<>p1 & <>p2) | <>(<>p1 & <>p3) | <>(<>p2 & <>p3)";
constexpr std::string_view kAfterConsequent = "<>(<>p1 & <>q) | <>(<>p2 & <>q)";

std::string axiom_text(AxiomName a) {
    using std::string;
    switch (a) {
    case AxiomName::a4: return "<><>p1 -> <>p1";
    case AxiomName::aT: return "p1 -> <>p1";
    case AxiomName::aD: return "<>T";
    case AxiomName::ad: return "<>p1 -> <><>p1";
    case AxiomName::ad2: return "<>p1 & <>p2 -> <>(<>p1 & <>p2)";
    case AxiomName::a2: return "<>[]p1 -> []<>p1";
    case AxiomName::ad32: return "<>p1 & <>p2 & <>p3 -> " + string(kTwoOfThree);
    case AxiomName::aaf:
        return "<>(<>(p1 & ~p2 & []~p2) & <>(p2 & ~p1 & []~p1)) & <>q -> " + string(kAfterConsequent);
    case AxiomName::aa2f:
        return "<>(p1 & ~p2 & []~p2) & <>(p2 & ~p1 & []~p1) & <>q -> " + string(kAfterConsequent);
    case AxiomName::rob2:
        // Q_i guards: p_i -> (~p_j & []~p_j) for both j != i.
        return "<>p1 & <>p2 & <>p3"
               " & [](p1 -> ~p2 & []~p2 & ~p3 & []~p3)"
               " & [](p2 -> ~p1 & []~p1 & ~p3 & []~p3)"
               " & [](p3 -> ~p1 & []~p1 & ~p2 & []~p2)"
               " -> " +
               string(kTwoOfThree);
    }
    return {};
}

} // namespace

std::string_view to_string(AxiomName a) {
    switch (a) {
    case AxiomName::a4: return "a4";
    case AxiomName::aT: return "aT";
    case AxiomName::aD: return "aD";
    case AxiomName::ad: return "ad";
    case AxiomName::ad2: return "ad2";
    case AxiomName::a2: return "a2";
    case AxiomName::ad32: return "ad32";
    case AxiomName::aaf: return "aaf";
    case AxiomName::aa2f: return "aa2f";
    case AxiomName::rob2: return "rob2";
    }
    return "?";
}

AxiomName axiom_from_string(std::string_view s) {
    if (!s.empty() && s.front() == '@') s.remove_prefix(1);
    for (AxiomName a : all_axioms)
        if (to_string(a) == s) return a;
    throw std::invalid_argument("unknown axiom '" + std::string(s) + "'");
}

const Formula& axiom(AxiomName a) {
    static const std::map<AxiomName, Formula> catalog = [] {
        std::map<AxiomName, Formula> m;
        for (AxiomName n : all_axioms) m.emplace(n, parse_formula(axiom_text(n)));
        return m;
    }();
    return catalog.at(a);
}

} // namespace stmodal

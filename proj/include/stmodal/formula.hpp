#pragma once

#include <array>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stmodal {

enum class Op { Top, Bottom, Atom, Not, And, Or, Implies, Iff, Box, Diamond };

/// Immutable modal formula. Copies share structure.
class Formula {
public:
    static Formula top();
    static Formula bottom();
    static Formula atom(std::string name);
    static Formula negation(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);
    static Formula box(Formula f);
    static Formula diamond(Formula f);

    [[nodiscard]] Op op() const { return node_->op; }
    [[nodiscard]] const std::string& name() const { return node_->name; }
    [[nodiscard]] const Formula& lhs() const { return node_->kids.at(0); }
    [[nodiscard]] const Formula& rhs() const { return node_->kids.at(1); }
    [[nodiscard]] const Formula& operand() const { return node_->kids.at(0); }
    [[nodiscard]] const std::vector<Formula>& children() const { return node_->kids; }

    /// Number of nodes in the tree.
    [[nodiscard]] std::size_t size() const;
    /// Modal depth (nesting of box/diamond).
    [[nodiscard]] std::size_t modal_depth() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Op op;
        std::string name;
        std::vector<Formula> kids;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Op op, std::string name, std::vector<Formula> kids);

    std::shared_ptr<const Node> node_;
};

/// Atom names occurring in f, sorted.
std::set<std::string> atoms(const Formula& f);

/// Canonical ASCII rendering; parse(print(f)) == f.
std::string print(const Formula& f);

bool is_identifier(std::string_view s);

// ---------------------------------------------------------------------------
// Axiom catalog

enum class AxiomName { a4, aT, aD, ad, ad2, a2, ad32, aaf, aa2f, rob2 };

inline constexpr std::array<AxiomName, 10> all_axioms{AxiomName::a4,   AxiomName::aT,  AxiomName::aD,
                                                     AxiomName::ad,   AxiomName::ad2, AxiomName::a2,
                                                     AxiomName::ad32, AxiomName::aaf, AxiomName::aa2f,
                                                     AxiomName::rob2};

std::string_view to_string(AxiomName a);
/// Accepts the tag with or without a leading '@'; throws std::invalid_argument otherwise.
AxiomName axiom_from_string(std::string_view s);

const Formula& axiom(AxiomName a);

// ---------------------------------------------------------------------------
// Parsing

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    [[nodiscard]] std::size_t offset() const { return offset_; }
    [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Parses the ASCII formula grammar. `@name` splices in a catalog axiom.
Formula parse_formula(std::string_view text);

} // namespace stmodal

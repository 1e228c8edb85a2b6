#include "stmodal/formula.hpp"
#include "stmodal/random.hpp"

#include <doctest.h>

using namespace stmodal;

namespace {
Formula p(const char* n) { return Formula::atom(n); }
} // namespace

TEST_CASE("parse: precedence and associativity") {
    CHECK(parse_formula("<>p1 & []~p2") ==
          Formula::conj(Formula::diamond(p("p1")), Formula::box(Formula::negation(p("p2")))));
    CHECK(parse_formula("p1 -> p2 -> p3") == Formula::implies(p("p1"), Formula::implies(p("p2"), p("p3"))));
    CHECK(parse_formula("a | b & c") == Formula::disj(p("a"), Formula::conj(p("b"), p("c"))));
    CHECK(parse_formula("a & b | c") == Formula::disj(Formula::conj(p("a"), p("b")), p("c")));
    CHECK(parse_formula("a <-> b <-> c") == Formula::iff(Formula::iff(p("a"), p("b")), p("c")));
    CHECK(parse_formula("a | b -> c <-> d") ==
          Formula::iff(Formula::implies(Formula::disj(p("a"), p("b")), p("c")), p("d")));
    CHECK(parse_formula("~[]<>a") == Formula::negation(Formula::box(Formula::diamond(p("a")))));
    CHECK(parse_formula("  T&F ") == Formula::conj(Formula::top(), Formula::bottom()));
    CHECK(parse_formula("(a -> b) -> c") == Formula::implies(Formula::implies(p("a"), p("b")), p("c")));
}

TEST_CASE("parse: diamond stays a node") {
    const Formula f = parse_formula("<>p");
    CHECK(f.op() == Op::Diamond);
    CHECK(f.operand() == p("p"));
}

TEST_CASE("parse: syntax errors carry offset and expectations") {
    try {
        parse_formula("p1 & ");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 5);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_formula(""), SyntaxError);
    CHECK_THROWS_AS(parse_formula("(p"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("p q"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("1p"), SyntaxError);
    CHECK_THROWS_AS(parse_formula("@nosuch"), std::exception);
    CHECK_THROWS_AS(Formula::atom("_x"), std::invalid_argument);
}

TEST_CASE("axiom catalog") {
    CHECK(axiom(AxiomName::aD) == Formula::diamond(Formula::top()));
    CHECK(atoms(axiom(AxiomName::ad32)) == std::set<std::string>{"p1", "p2", "p3"});
    CHECK(atoms(axiom(AxiomName::aaf)) == std::set<std::string>{"p1", "p2", "q"});
    CHECK(atoms(Formula::top()).empty());
    CHECK(atoms(parse_formula("p1 | p1")) == std::set<std::string>{"p1"});
    CHECK(parse_formula("@aaf") == axiom(AxiomName::aaf));
    CHECK(axiom_from_string("@ad32") == AxiomName::ad32);
    CHECK(axiom_from_string("aa2f") == AxiomName::aa2f);

    // The two after formulas differ by one diamond at the root of the first antecedent conjunct.
    const Formula& aaf = axiom(AxiomName::aaf);
    const Formula& aa2f = axiom(AxiomName::aa2f);
    REQUIRE(aaf.op() == Op::Implies);
    REQUIRE(aa2f.op() == Op::Implies);
    CHECK(aaf.rhs() == aa2f.rhs());
    REQUIRE(aaf.lhs().op() == Op::And);
    REQUIRE(aa2f.lhs().op() == Op::And);
    CHECK(aaf.lhs().rhs() == aa2f.lhs().rhs());
    REQUIRE(aaf.lhs().lhs().op() == Op::Diamond);
    CHECK(aaf.lhs().lhs().operand() == aa2f.lhs().lhs());
    CHECK(aaf.size() == aa2f.size() + 1);
}

TEST_CASE("rob2 guards") {
    auto n = [](const Formula& f) { return Formula::negation(f); };
    auto excl = [&](const char* i, const char* j, const char* k) {
        const Formula body = Formula::conj(Formula::conj(Formula::conj(n(p(j)), Formula::box(n(p(j)))), n(p(k))),
                                           Formula::box(n(p(k))));
        return Formula::box(Formula::implies(p(i), body));
    };
    const Formula three = Formula::conj(Formula::conj(Formula::diamond(p("p1")), Formula::diamond(p("p2"))),
                                        Formula::diamond(p("p3")));
    const Formula ante = Formula::conj(
        Formula::conj(Formula::conj(three, excl("p1", "p2", "p3")), excl("p2", "p1", "p3")), excl("p3", "p1", "p2"));
    const Formula& rob2 = axiom(AxiomName::rob2);
    REQUIRE(rob2.op() == Op::Implies);
    CHECK(rob2.lhs() == ante);
    CHECK(rob2.rhs() == axiom(AxiomName::ad32).rhs());
}

TEST_CASE("print/parse round trip") {
    for (AxiomName a : all_axioms) CHECK(parse_formula(print(axiom(a))) == axiom(a));
    Rng rng(derive_seed(0, 1));
    for (int i = 0; i < 1000; ++i) {
        const Formula f = random_formula(rng, 4, 3);
        const std::string s = print(f);
        INFO(s);
        CHECK(parse_formula(s) == f);
    }
}

TEST_CASE("size and modal depth") {
    const Formula f = parse_formula("<>[]p & q");
    CHECK(f.size() == 5);
    CHECK(f.modal_depth() == 2);
}

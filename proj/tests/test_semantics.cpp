#include "stmodal/errors.hpp"
#include "stmodal/fixtures.hpp"
#include "stmodal/model.hpp"
#include "stmodal/properties.hpp"
#include "stmodal/random.hpp"

#include <doctest.h>

using namespace stmodal;

namespace {

const Fixtures& fx() {
    static const Fixtures f = builtin_fixtures();
    return f;
}

} // namespace

TEST_CASE("satisfaction basics") {
    const Model m(Frame({"a", "b"}, {{"a", "b"}}));
    const World b = m.frame().index("b");
    CHECK(satisfies(m, "a", Formula::top()));
    CHECK(satisfies(m, b, Formula::box(Formula::bottom())));
    CHECK_FALSE(satisfies(m, b, Formula::diamond(Formula::top())));
    CHECK(satisfies(m, "a", Formula::diamond(Formula::top())));
    CHECK_THROWS_AS(satisfies(m, "zz", Formula::top()), UnknownWorld);
    CHECK(truth_set(m, Formula::top()) == m.frame().all());
    CHECK(truth_set(m, Formula::atom("unused")).empty());
}

TEST_CASE("figure counter-models") {
    const Model& m6a = fx().models.at("fig6a");
    const Formula& aaf = axiom(AxiomName::aaf);
    REQUIRE(aaf.op() == Op::Implies);
    CHECK(satisfies(m6a, "s", aaf.lhs()));
    CHECK_FALSE(satisfies(m6a, "s", aaf.rhs()));

    const Model& m11 = fx().models.at("fig11");
    CHECK_FALSE(truth_set(m11, axiom(AxiomName::aa2f)).contains(m11.frame().index("r")));
}

TEST_CASE("truth sets agree with pointwise satisfaction") {
    Rng rng(derive_seed(0, 21));
    for (int i = 0; i < 200; ++i) {
        const Model m = random_model(rng, random_frame(rng, 6), 2);
        const Formula p = random_formula(rng, 3, 2);
        const WorldSet t = truth_set(m, p);
        for (World w = 0; w < m.frame().size(); ++w) CHECK(t.contains(w) == satisfies(m, w, p));
        // Diamond is the preimage of the truth set.
        CHECK(truth_set(m, Formula::diamond(p)) == m.frame().preimage(t));
        for (World w = 0; w < m.frame().size(); ++w)
            CHECK(satisfies(m, w, Formula::diamond(p)) ==
                  !satisfies(m, w, Formula::box(Formula::negation(p))));
        const Formula q = Formula::conj(p, random_formula(rng, 2, 2));
        CHECK(truth_set(m, Formula::diamond(q)).is_subset_of(truth_set(m, Formula::diamond(p))));
    }
}

TEST_CASE("frame validity") {
    const Frame refl({"a"}, {{"a", "a"}});
    for (AxiomName a : {AxiomName::aT, AxiomName::a4, AxiomName::aD, AxiomName::ad, AxiomName::ad2, AxiomName::a2,
                        AxiomName::aaf, AxiomName::aa2f})
        CHECK(frame_validates(refl, axiom(a)).valid);

    const Frame& f6a = fx().models.at("fig6a").frame();
    const ValidityVerdict v = frame_validates(f6a, axiom(AxiomName::aaf));
    REQUIRE_FALSE(v.valid);
    CHECK(f6a.name(v.world) == "s");
    CHECK(format_verdict(f6a, v).rfind("COUNTER world=s valuation={", 0) == 0);
    CHECK_FALSE(satisfies(Model(f6a, v.valuation), v.world, axiom(AxiomName::aaf)));

    const Frame& f12 = fx().models.at("fig12").frame();
    CHECK_FALSE(frame_validates(f12, axiom(AxiomName::aa2f)).valid);
    CHECK(check_property(f12, FrameProperty::transitive).holds);
    CHECK(format_verdict(refl, frame_validates(refl, axiom(AxiomName::aT))) == "VALID");
}

TEST_CASE("validity budget") {
    const Frame big = Frame::numbered(10, {});
    CHECK(valuation_count_log2(big, axiom(AxiomName::aaf)) == 30);
    try {
        frame_validates(big, axiom(AxiomName::aaf));
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.required_log2() == 30);
    }
    CHECK_THROWS_AS(frame_validates_reference(big, axiom(AxiomName::aaf), 1 << 10), BudgetExceeded);
    CHECK(frame_validates(big, axiom(AxiomName::aD), 1 << 10).valid == false);
}

TEST_CASE("kernel agrees with serial reference") {
    Rng rng(derive_seed(0, 22));
    for (int i = 0; i < 300; ++i) {
        const Frame f = random_frame(rng, 4);
        const Formula p = i % 3 == 0 ? axiom(all_axioms[static_cast<std::size_t>(i / 3) % all_axioms.size()])
                                     : random_formula(rng, 3, 2);
        if (valuation_count_log2(f, p) > 12) continue;
        const ValidityVerdict fast = frame_validates(f, p);
        const ValidityVerdict slow = frame_validates_reference(f, p);
        INFO(print(p));
        CHECK(fast.valid == slow.valid);
        if (!fast.valid && !slow.valid) {
            CHECK(fast.valuation_index == slow.valuation_index);
            CHECK(fast.world == slow.world);
            CHECK(fast.valuation == slow.valuation);
        }
    }
}

TEST_CASE("bisimulation checks") {
    const Model& m6a = fx().models.at("fig6a");
    WorldPairs id;
    for (World w = 0; w < m6a.frame().size(); ++w) id.emplace_back(w, w);
    CHECK(is_bisimulation(m6a, m6a, id).holds);
    CHECK_FALSE(is_bisimulation(m6a, m6a, {}).holds);

    const Model& f1 = fx().models.at("fig10_f1");
    const Model& f2 = fx().models.at("fig10_f2");
    CHECK(is_bisimulation(f1, f2, fx().fig10_z).holds);
    // With child-to-parent edges, {(x,x')} relates two dead ends and is a bisimulation;
    // {(y,y')} cannot match the step from y to x.
    CHECK(is_bisimulation(f1, f2, {{f1.frame().index("x"), f2.frame().index("x'")}}).holds);
    const BisimulationVerdict bad = is_bisimulation(f1, f2, {{f1.frame().index("y"), f2.frame().index("y'")}});
    CHECK_FALSE(bad.holds);
    CHECK(bad.clause == "forth");
    CHECK(f1.frame().name(bad.step) == "x");

    const auto z = coarsest_bisimulation(f1, f2);
    REQUIRE(z.has_value());
    auto has = [&](const char* a, const char* b) {
        return std::find(z->begin(), z->end(), std::make_pair(f1.frame().index(a), f2.frame().index(b))) != z->end();
    };
    CHECK(has("y", "y'"));
    CHECK(has("z", "y'"));
    CHECK(has("x", "x'"));
    CHECK(is_bisimulation(f1, f2, *z).holds);
}

TEST_CASE("coarsest bisimulation") {
    // Atom disagreement everywhere leaves nothing.
    const Model a(Frame({"u"}, std::vector<Edge>{}), {{"p", WorldSet::full(1)}});
    const Model b(Frame({"v"}, std::vector<Edge>{}));
    CHECK_FALSE(coarsest_bisimulation(a, b).has_value());

    Rng rng(derive_seed(0, 23));
    for (int i = 0; i < 100; ++i) {
        const Model m = random_model(rng, random_frame(rng, 5), 2);
        const auto z = coarsest_bisimulation(m, m);
        REQUIRE(z.has_value());
        for (World w = 0; w < m.frame().size(); ++w)
            CHECK(std::find(z->begin(), z->end(), std::make_pair(w, w)) != z->end());
        CHECK(is_bisimulation(m, m, *z).holds);
        for (int k = 0; k < 20; ++k) {
            const Formula f = random_formula(rng, 4, 2);
            for (auto [u, v] : *z) CHECK(satisfies(m, u, f) == satisfies(m, v, f));
        }
    }
}

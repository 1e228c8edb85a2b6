#include "stmodal/correspondence.hpp"
#include "stmodal/errors.hpp"
#include "stmodal/fixtures.hpp"
#include "stmodal/random.hpp"

#include <doctest.h>

using namespace stmodal;

namespace {

const Fixtures& fx() {
    static const Fixtures f = builtin_fixtures();
    return f;
}

std::vector<AxiomName> supported() {
    std::vector<AxiomName> out;
    for (AxiomName a : all_axioms)
        if (has_fo_correspondent(a)) out.push_back(a);
    return out;
}

} // namespace

TEST_CASE("supported axioms") {
    CHECK(supported().size() == 9);
    CHECK_FALSE(has_fo_correspondent(AxiomName::rob2));
    CHECK_THROWS_AS(fo_check(Frame({"a"}, std::vector<Edge>{}), AxiomName::rob2), UnsupportedAxiom);
    for (AxiomName a : supported()) CHECK_FALSE(fo_condition(a).empty());
}

TEST_CASE("single reflexive world satisfies every correspondent") {
    const Frame refl({"a"}, {{"a", "a"}});
    for (AxiomName a : supported()) CHECK(fo_check(refl, a).holds);
}

TEST_CASE("aaf counterexample on fig6a binds the drawn worlds") {
    const Frame& f = fx().models.at("fig6a").frame();
    const Verdict v = fo_check(f, AxiomName::aaf);
    REQUIRE_FALSE(v.holds);
    std::map<std::string, std::string> b;
    for (const auto& [var, w] : v.bindings) b[var] = f.name(w);
    CHECK(b["x"] == "s");
    CHECK(b["y"] == "0");
    CHECK(b["y1"] == "00");
    CHECK(b["y2"] == "01");
    CHECK(b["z"] == "1");
}

TEST_CASE("figure crosschecks") {
    const CrosscheckReport r11 = crosscheck(fx().models.at("fig11").frame(), AxiomName::aa2f);
    CHECK_FALSE(r11.first_order.holds);
    CHECK_FALSE(r11.semantic.valid);
    const CrosscheckReport r12 = crosscheck(fx().models.at("fig12").frame(), AxiomName::ad32);
    CHECK(r12.first_order.holds);
    CHECK(r12.semantic.valid);
}

TEST_CASE("parallel checker agrees with the literal reference") {
    Rng rng(derive_seed(0, 31));
    for (int i = 0; i < 400; ++i) {
        const Frame f = random_frame(rng, 6, 0.4);
        for (AxiomName a : supported()) {
            const Verdict fast = fo_check(f, a);
            const Verdict slow = fo_check_reference(f, a);
            CHECK(fast.holds == slow.holds);
            CHECK(fast.bindings == slow.bindings);
        }
    }
}

TEST_CASE("correspondents agree with validity") {
    Rng rng(derive_seed(0, 32));
    for (int i = 0; i < 500; ++i) {
        const Frame f = random_frame(rng, 5);
        for (AxiomName a : supported()) {
            const CrosscheckReport r = crosscheck(f, a);
            INFO(to_string(a));
            CHECK(r.agree());
        }
    }
}

TEST_CASE("ad32 implies ad on serial frames") {
    Rng rng(derive_seed(0, 33));
    int serial = 0;
    for (int i = 0; i < 2000; ++i) {
        const Frame f = random_frame(rng, 5, 0.45);
        if (!check_property(f, FrameProperty::serial).holds) continue;
        ++serial;
        if (fo_check(f, AxiomName::ad32).holds) CHECK(fo_check(f, AxiomName::ad).holds);
    }
    CHECK(serial > 100);
}

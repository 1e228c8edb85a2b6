#include "stmodal/errors.hpp"
#include "stmodal/minkowski.hpp"
#include "stmodal/properties.hpp"
#include "stmodal/random.hpp"

#include <doctest.h>

using namespace stmodal;

namespace {

MinkPoint pt(const char* s) { return parse_point(s); }

Cylinder cyl(std::initializer_list<const char*> punctures = {}) {
    Cylinder c;
    for (const char* p : punctures) c.punctures.push_back(pt(p));
    return c;
}

// Relations on the unpunctured cylinder via lifts y + k(L, L) in the universal cover.
RelationVerdict lift_oracle(const Cylinder& c, const MinkPoint& x, const MinkPoint& y, int bound) {
    const Space cover = Minkowski{1};
    RelationVerdict v;
    const MinkPoint shift{c.circumference, c.circumference};
    for (int k = -bound; k <= bound; ++k) {
        const MinkPoint yk = y + Rational(k) * shift;
        const RelationVerdict r = relate(cover, x, yk);
        v.chron = v.chron || r.chron;
        v.after = v.after || r.after;
    }
    v.caus = v.after || same_point(c, x, y);
    v.horismos = v.caus && !v.chron;
    return v;
}

// after for a null-separated pair on a punctured cylinder: some lifted null segment from x to a lift
// of y must avoid every lifted puncture in its interior.
bool null_after_oracle(const Cylinder& c, const MinkPoint& x, const MinkPoint& y, int bound) {
    const Rational L = c.circumference;
    for (int k = -bound; k <= bound; ++k) {
        const MinkPoint d = y + Rational(k) * MinkPoint{L, L} - x;
        if (!(d.coords[0] > 0 && d.coords[0] == d.coords[1])) continue;
        bool blocked = false;
        for (const auto& q : c.punctures)
            for (int m = -bound; m <= bound; ++m) {
                const MinkPoint e = q + Rational(m) * MinkPoint{L, L} - x;
                if (e.coords[0] == e.coords[1] && e.coords[0] > 0 && e.coords[0] < d.coords[0]) blocked = true;
            }
        if (!blocked) return true;
    }
    return false;
}

} // namespace

TEST_CASE("minkowski relations from the definitions") {
    const RelationVerdict n = relate(Minkowski{1}, pt("0,0"), pt("1,1"));
    CHECK(n.horismos);
    CHECK_FALSE(n.chron);
    CHECK(n.after);
    CHECK(relate(Minkowski{2}, pt("0,0,0"), pt("2,1,0")).chron);
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        MinkPoint x;
        for (std::size_t i = 0; i <= dim; ++i) x.coords.emplace_back(Rational(static_cast<long>(i), 3));
        const RelationVerdict self = relate(Minkowski{dim}, x, x);
        CHECK(self.caus);
        CHECK(self.horismos);
        CHECK_FALSE(self.after);
        CHECK_FALSE(self.chron);
    }
    CHECK_FALSE(relate(Minkowski{1}, pt("0,0"), pt("1,2")).caus);
    CHECK_FALSE(relate(Minkowski{1}, pt("1,1"), pt("0,0")).caus);
    CHECK(strongest_relation(relate(Minkowski{1}, pt("0,0"), pt("2,1")), false) == "chron");
    CHECK_THROWS_AS(relate(Minkowski{2}, pt("0,0"), pt("1,1")), DimensionMismatch);
    CHECK_THROWS_AS(relate(Minkowski{1}, pt("0,0,0"), pt("1,1,0")), DimensionMismatch);
}

TEST_CASE("points and spaces parse") {
    CHECK(pt("(0,1/2,-3/4)").coords.size() == 3);
    CHECK(to_string(pt("0, 2/4")) == "(0,1/2)");
    CHECK_THROWS(pt("0,1/0"));
    CHECK_THROWS(pt("0,x"));
    CHECK(std::get<Minkowski>(parse_space("mink:3")).n == 3);
    const Cylinder c = std::get<Cylinder>(parse_space("cyl:L=2,puncture=1/8,1/8,puncture=0,1"));
    CHECK(c.circumference == 2);
    CHECK(c.punctures.size() == 2);
    CHECK(to_string(Space{c}) == "cyl:L=2,puncture=1/8,1/8,puncture=0,1");
    CHECK_THROWS(parse_space("mink:0"));
    CHECK_THROWS(parse_space("cyl:L=0"));
    CHECK_THROWS(parse_space("cyl:L=1,puncture=0,0,puncture=1,1"));
    CHECK_THROWS(parse_space("euclid:2"));
}

TEST_CASE("cylinder closed forms") {
    const Cylinder c = cyl();
    const RelationVerdict self = relate(c, pt("0,0"), pt("0,0"));
    CHECK(self.after);
    CHECK_FALSE(self.chron);
    CHECK(same_point(c, pt("0,0"), pt("1,1")));
    CHECK(same_point(c, pt("1/2,-3/4"), pt("-3/2,-11/4")));
    CHECK_FALSE(same_point(c, pt("1/2,-3/4"), pt("5/4,0")));
    CHECK(canonical(c, pt("1/2,-3/4")) == pt("3/2,1/4"));
    CHECK(relate(c, pt("0,0"), pt("1/2,0")).chron);
    // Left-moving displacements wrap around into the chronological future.
    CHECK(relate(c, pt("0,0"), pt("1/4,-1/4")).chron);
    CHECK_FALSE(relate(c, pt("0,0"), pt("-1/4,1/4")).caus);
    CHECK_THROWS_AS(relate(c, pt("0,0,0"), pt("0,0,0")), DimensionMismatch);
}

TEST_CASE("cylinder closed forms match the lift oracle") {
    Rng rng(derive_seed(0, 41));
    for (const char* L : {"1", "3/2", "1/3"}) {
        Cylinder c;
        c.circumference = parse_rational(L);
        // |dt + dth| <= 16 on this grid, so |k| <= 16 / (2L) + 1 lifts suffice.
        const int bound = static_cast<int>(floor(Rational(16) / (2 * c.circumference)).get_d()) + 2;
        for (int i = 0; i < 1000; ++i) {
            const MinkPoint x = random_point(rng, 1);
            const MinkPoint y = i % 4 == 0 ? x + random_rational(rng, 2, 4) * MinkPoint{1, 1} : random_point(rng, 1);
            const RelationVerdict got = relate(c, x, y);
            const RelationVerdict want = lift_oracle(c, x, y, bound);
            INFO(to_string(x), " ", to_string(y));
            CHECK(got.chron == want.chron);
            CHECK(got.after == want.after);
            CHECK(got.caus == want.caus);
            CHECK(got.horismos == want.horismos);
        }
    }
}

TEST_CASE("punctured cylinder") {
    const Cylinder c = cyl({"1/8,1/8"});
    // The puncture sits between (0,0) and (1/4,1/4) on their null circle.
    CHECK_FALSE(relate(c, pt("0,0"), pt("1/4,1/4")).after);
    CHECK_FALSE(relate(c, pt("0,0"), pt("1/4,1/4")).caus);
    CHECK(relate(c, pt("1/4,1/4"), pt("0,0")).after);
    CHECK(relate(c, pt("1/4,1/4"), pt("1/2,1/2")).after);
    CHECK_FALSE(relate(c, pt("1/16,1/16"), pt("0,0")).after);
    CHECK(relate(c, pt("1/4,1/4"), pt("1/16,1/16")).after);
    CHECK_FALSE(relate(c, pt("0,0"), pt("0,0")).after);
    CHECK(relate(c, pt("0,0"), pt("0,0")).caus);
    // Timelike pairs keep their diamonds.
    CHECK(relate(c, pt("0,0"), pt("1/4,0")).chron);
    CHECK(relate(c, pt("1/3,0"), pt("1/3,0")).after);
    CHECK_THROWS_AS(relate(c, pt("1/8,1/8"), pt("1,0")), PreconditionFailed);
    CHECK_THROWS_AS(relate(c, pt("0,0"), pt("9/8,9/8")), PreconditionFailed);

    const Cylinder at0 = cyl({"0,0"});
    CHECK_FALSE(after_reflexive(at0, pt("1,1")));
    CHECK(after_reflexive(at0, pt("1,0")));
    CHECK(after_reflexive(cyl(), pt("1/3,2/7")));
}

TEST_CASE("punctured null pairs match the cover oracle") {
    Rng rng(derive_seed(0, 42));
    const Cylinder c = cyl({"1/8,1/8", "1/2,3/4", "0,1/2"});
    int tested = 0;
    for (int i = 0; i < 4000 && tested < 1000; ++i) {
        const MinkPoint x = random_point(rng, 1, 2, 8);
        const MinkPoint y = x + random_rational(rng, 2, 8) * MinkPoint{1, 1};
        bool hole = false;
        for (const auto& q : c.punctures) hole = hole || same_point(c, q, x) || same_point(c, q, y);
        if (hole) continue;
        ++tested;
        INFO(to_string(x), " ", to_string(y));
        CHECK(relate(c, x, y).after == null_after_oracle(c, x, y, 12));
    }
    CHECK(tested == 1000);
}

TEST_CASE("sample frames") {
    const CausalFrame cf = sample_frame(Minkowski{1}, {pt("0,0"), pt("1,1"), pt("2,0")});
    CHECK(cf.after().pairs() == std::vector<std::pair<World, World>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(cf.chron().pairs() == std::vector<std::pair<World, World>>{{0, 2}});
    CHECK(cf.sample_relative());
    CHECK(sample_frame(Minkowski{2}, {}).size() == 0);
    CHECK_THROWS_AS(sample_frame(Minkowski{1}, {pt("0,0"), pt("0,0")}), PreconditionFailed);
    CHECK_THROWS_AS(sample_frame(cyl(), {pt("0,0"), pt("1,1")}), PreconditionFailed);

    Rng rng(derive_seed(0, 43));
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        const Space space = i % 4 == 3 ? Space{cyl()} : Space{Minkowski{n}};
        std::vector<MinkPoint> pts;
        while (pts.size() < 6) {
            MinkPoint p = random_point(rng, spatial_dim(space), 3, 2);
            if (std::none_of(pts.begin(), pts.end(), [&](const MinkPoint& q) { return same_point(space, p, q); }))
                pts.push_back(p);
        }
        const CausalFrame s = sample_frame(space, pts);
        CHECK(check_property(s.chron(), FrameProperty::transitive).holds);
        CHECK(check_property(s.after(), FrameProperty::transitive).holds);
        CHECK(invariant_violations(s).empty());
    }
}

TEST_CASE("push-up and order lemma on samples") {
    Rng rng(derive_seed(0, 44));
    for (const Space& space : {Space{Minkowski{1}}, Space{Minkowski{2}}, Space{cyl()}, Space{cyl({"1/8,1/8"})}}) {
        const std::size_t n = spatial_dim(space);
        int premises = 0;
        for (int i = 0; i < 20000; ++i) {
            const MinkPoint x = random_point(rng, n);
            const MinkPoint y = x + random_future_causal(rng, n);
            const MinkPoint z = y + (i % 2 ? random_future_causal(rng, n) : random_point(rng, n, 1, 4));
            try {
                const RelationVerdict xy = relate(space, x, y), yz = relate(space, y, z), xz = relate(space, x, z);
                for (const auto* v : {&xy, &yz, &xz}) {
                    CHECK((!v->chron || v->after));
                    CHECK((!v->after || v->caus));
                }
                if ((xy.chron && yz.caus) || (xy.caus && yz.chron)) {
                    ++premises;
                    CHECK(xz.chron);
                }
            } catch (const PreconditionFailed&) {
                // landed on a puncture
            }
        }
        CHECK(premises > 1000);
    }
}

TEST_CASE("chronological midpoints") {
    Rng rng(derive_seed(0, 45));
    for (std::size_t n = 1; n <= 3; ++n) {
        const Space space = Minkowski{n};
        int seen = 0;
        for (int i = 0; i < 2000; ++i) {
            const MinkPoint x = random_point(rng, n);
            const MinkPoint y = random_point(rng, n);
            if (!relate(space, x, y).chron) continue;
            ++seen;
            const MinkPoint m = Rational(1, 2) * (x + y);
            CHECK(relate(space, x, m).chron);
            CHECK(relate(space, m, y).chron);
        }
        CHECK(seen > 50);
    }
}

TEST_CASE("lorentz products") {
    CHECK(interval(pt("2,1,0")) == 3);
    CHECK(interval(pt("1,1,0")) == 0);
    CHECK(lorentz_dot(pt("1,1,0"), pt("1,0,1")) == 1);
    CHECK_THROWS_AS(lorentz_dot(pt("1,1"), pt("1,0,1")), DimensionMismatch);
}

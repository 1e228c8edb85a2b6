#include "stmodal/random.hpp"

#include <string>

namespace stmodal {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

} // namespace

Frame random_frame(Rng& rng, std::size_t max_worlds, double density) {
    const std::size_t n = uniform(rng, 1, max_worlds);
    std::vector<std::pair<World, World>> edges;
    for (World a = 0; a < n; ++a)
        for (World b = 0; b < n; ++b)
            if (coin(rng, density)) edges.emplace_back(a, b);
    return Frame::numbered(n, edges);
}

Frame random_transitive_frame(Rng& rng, std::size_t max_worlds, double density, double reflexive) {
    const std::size_t n = uniform(rng, 1, max_worlds);
    std::vector<std::pair<World, World>> edges;
    for (World a = 0; a < n; ++a) {
        if (coin(rng, reflexive)) edges.emplace_back(a, a);
        for (World b = 0; b < n; ++b)
            if (a != b && coin(rng, density)) edges.emplace_back(a, b);
    }
    return Frame::numbered(n, edges).transitive_closure();
}

Formula random_formula(Rng& rng, int depth, int atom_count) {
    const std::size_t leaf = uniform(rng, 0, static_cast<std::size_t>(atom_count) + 1);
    if (depth <= 0 || coin(rng, 0.25)) {
        if (leaf == 0) return coin(rng, 0.5) ? Formula::top() : Formula::bottom();
        return Formula::atom("p" + std::to_string(uniform(rng, 1, static_cast<std::size_t>(atom_count))));
    }
    switch (uniform(rng, 0, 7)) {
    case 0: return Formula::negation(random_formula(rng, depth, atom_count));
    case 1: return Formula::box(random_formula(rng, depth - 1, atom_count));
    case 2: return Formula::diamond(random_formula(rng, depth - 1, atom_count));
    case 3: return Formula::conj(random_formula(rng, depth, atom_count), random_formula(rng, depth, atom_count));
    case 4: return Formula::disj(random_formula(rng, depth, atom_count), random_formula(rng, depth, atom_count));
    case 5: return Formula::implies(random_formula(rng, depth, atom_count), random_formula(rng, depth, atom_count));
    case 6: return Formula::iff(random_formula(rng, depth, atom_count), random_formula(rng, depth, atom_count));
    default: return Formula::diamond(Formula::box(random_formula(rng, depth - 2, atom_count)));
    }
}

Model random_model(Rng& rng, const Frame& frame, int atom_count) {
    Valuation val;
    for (int a = 1; a <= atom_count; ++a) {
        WorldSet s = frame.empty_set();
        for (World w = 0; w < frame.size(); ++w)
            if (coin(rng, 0.5)) s.insert(w);
        val.emplace("p" + std::to_string(a), std::move(s));
    }
    return Model(frame, std::move(val));
}

Rational random_rational(Rng& rng, int range, int den) {
    const long k = std::uniform_int_distribution<long>(-static_cast<long>(range) * den,
                                                       static_cast<long>(range) * den)(rng);
    Rational q(k, den);
    q.canonicalize();
    return q;
}

MinkPoint random_point(Rng& rng, std::size_t n, int range, int den) {
    MinkPoint p;
    for (std::size_t i = 0; i <= n; ++i) p.coords.push_back(random_rational(rng, range, den));
    return p;
}

MinkPoint random_null_direction(Rng& rng, std::size_t n) {
    MinkPoint d;
    d.coords.emplace_back(1);
    if (n == 1) {
        d.coords.emplace_back(coin(rng, 0.5) ? 1 : -1);
        return d;
    }
    // v in Q^{n-1} maps to (2v, |v|^2 - 1) / (|v|^2 + 1) on the unit sphere.
    std::vector<Rational> v;
    Rational norm2 = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        v.push_back(random_rational(rng, 3, 4));
        norm2 += v.back() * v.back();
    }
    const Rational scale = norm2 + 1;
    for (const auto& c : v) d.coords.emplace_back(2 * c / scale);
    d.coords.emplace_back((norm2 - 1) / scale);
    return d;
}

MinkPoint random_future_causal(Rng& rng, std::size_t n) {
    const Rational len(static_cast<long>(uniform(rng, 1, 12)), 4);
    if (coin(rng, 0.5)) return len * random_null_direction(rng, n);
    MinkPoint v;
    v.coords.emplace_back(0);
    Rational l1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        v.coords.push_back(random_rational(rng, 2, 4));
        l1 += abs(v.coords.back());
    }
    // |v|_1 bounds |v|_2, so any positive slack gives a timelike vector.
    v.coords[0] = l1 + len;
    return v;
}

} // namespace stmodal

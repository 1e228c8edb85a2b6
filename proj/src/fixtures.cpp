#include "stmodal/fixtures.hpp"

#include "stmodal/clusters.hpp"
#include "stmodal/correspondence.hpp"
#include "stmodal/frame_io.hpp"
#include "stmodal/properties.hpp"

#include <json.hpp>

#include <algorithm>

namespace stmodal {

namespace {

Model model(const std::vector<std::string>& worlds, const std::vector<Edge>& edges, bool close,
            const std::vector<std::pair<std::string, std::vector<std::string>>>& val = {}) {
    Frame f(worlds, edges);
    if (close) f = f.transitive_closure();
    Valuation v;
    for (const auto& [atom, ws] : val) {
        WorldSet s = f.empty_set();
        for (const auto& w : ws) s.insert(f.index(w));
        v.emplace(atom, std::move(s));
    }
    return Model(std::move(f), std::move(v));
}

std::vector<Edge> loops(const std::vector<std::string>& ws) {
    std::vector<Edge> out;
    for (const auto& w : ws) out.emplace_back(w, w);
    return out;
}

std::vector<Edge> operator+(std::vector<Edge> a, const std::vector<Edge>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Model fig6a() {
    const std::vector<Edge> edges = {{"s", "0"},  {"s", "1"},  {"0", "00"}, {"0", "01"},
                                     {"01", "T"}, {"00", "T"}, {"1", "T"}};
    return model({"s", "0", "1", "00", "01", "T"}, edges + loops({"0", "1", "T"}), true,
                 {{"p1", {"00"}}, {"p2", {"01"}}, {"q", {"1"}}});
}

Model fig6b() {
    const std::vector<std::string> ws = {"s", "0", "1", "00", "01"};
    const std::vector<Edge> edges = {{"s", "0"}, {"s", "1"}, {"0", "00"}, {"0", "01"}};
    return model(ws, edges + loops(ws), false, {{"p1", {"00"}}, {"p2", {"01"}}, {"q", {"1"}}});
}

Model fig9() {
    const std::vector<std::string> ws = {"x",    "s0",    "s00",  "s000",  "i0", "y",  "i1s0",   "i1s00", "i1i0",
                                         "i1s1", "i1s10", "s1",   "i2",    "s10", "s100", "i3", "s1000"};
    const std::vector<Edge> tree = {{"x", "s0"},       {"x", "s1"},      {"s0", "s00"},     {"s00", "s000"},
                                    {"s0", "i0"},      {"i0", "y"},      {"y", "i1s0"},     {"i1s0", "i1s00"},
                                    {"i1s0", "i1i0"},  {"y", "i1s1"},    {"i1s1", "i1s10"}, {"s1", "i2"},
                                    {"s1", "s10"},     {"s10", "s100"},  {"s100", "i3"},    {"s100", "s1000"}};
    const std::vector<Edge> extra = {{"s1", "i0"},  {"s0", "i2"},       {"i2", "i1s0"},    {"s0", "i3"},
                                     {"i3", "i1s10"}, {"s000", "i1s00"}, {"i1s1", "i1i0"}};
    std::vector<std::string> reflexive;
    for (const auto& w : ws)
        if (w != "x" && w != "s00" && w != "y" && w != "s100") reflexive.push_back(w);
    return model(ws, tree + extra + loops(reflexive), true);
}

// Edges point from child to parent.
Model fig10_f1() { return model({"x", "y", "z"}, {{"z", "x"}, {"y", "x"}, {"y", "y"}, {"z", "z"}}, false); }
Model fig10_f2() { return model({"x'", "y'"}, {{"y'", "x'"}, {"y'", "y'"}}, false); }

Model fig11() {
    const std::vector<Edge> edges = {{"r", "y1"}, {"r", "y2"}, {"r", "z"}};
    return model({"r", "y1", "y2", "z"}, edges + loops({"y1", "y2", "z"}), false,
                 {{"p1", {"y1"}}, {"p2", {"y2"}}, {"q", {"z"}}});
}

Model fig12() {
    const std::vector<Edge> edges = {{"r", "1"}, {"1", "10"}, {"1", "11"}, {"r", "0"}};
    return model({"r", "0", "1", "10", "11"}, edges + loops({"0", "1", "10", "11"}), true,
                 {{"p1", {"10"}}, {"p2", {"11"}}, {"q", {"0"}}});
}

// Two worlds below the boundary (chron-reflexive), two on it (after-reflexive only), two above.
CausalFrame fig4b() {
    const std::vector<std::string> below = {"b0", "b1"}, on = {"m0", "m1"}, above = {"a0", "a1"};
    std::vector<Edge> chron;
    for (const auto& b : below) {
        for (const auto& b2 : below) chron.emplace_back(b, b2);
        for (const auto& m : on) chron.emplace_back(b, m);
        for (const auto& a : above) chron.emplace_back(b, a);
    }
    for (const auto& m : on)
        for (const auto& a : above) chron.emplace_back(m, a);
    chron.emplace_back("a0", "a1");
    std::vector<Edge> after = chron;
    for (const auto& m : on)
        for (const auto& m2 : on) after.emplace_back(m, m2);
    return CausalFrame({"b0", "b1", "m0", "m1", "a0", "a1"}, chron, after);
}

CausalFrame totally_vicious() {
    const std::vector<std::string> ws = {"u", "v", "w"};
    std::vector<Edge> all;
    for (const auto& a : ws)
        for (const auto& b : ws) all.emplace_back(a, b);
    return CausalFrame(ws, all, all);
}

std::vector<MinkPoint> points(const std::vector<std::vector<std::string>>& raw) {
    std::vector<MinkPoint> out;
    for (const auto& p : raw) {
        MinkPoint m;
        for (const auto& c : p) m.coords.push_back(parse_rational(c));
        out.push_back(std::move(m));
    }
    return out;
}

const std::vector<std::string> model_names = {"fig6a", "fig6b", "fig9", "fig10_f1", "fig10_f2", "fig11", "fig12"};
const std::vector<std::string> causal_names = {"fig4b",        "totally_vicious", "cyl_sample",
                                               "cyl_punctured_sample", "mink1_sample", "mink2_sample"};

} // namespace

Cylinder sample_cylinder(bool punctured) {
    Cylinder c;
    c.circumference = 1;
    if (punctured) c.punctures.push_back(MinkPoint{Rational(1, 8), Rational(1, 8)});
    return c;
}

std::vector<MinkPoint> cylinder_grid() {
    std::vector<MinkPoint> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rational th(i, 4);
            out.push_back(MinkPoint{th + Rational(j, 3), th});
        }
    return out;
}

Fixtures builtin_fixtures() {
    Fixtures fx;
    fx.models.emplace("fig6a", fig6a());
    fx.models.emplace("fig6b", fig6b());
    fx.models.emplace("fig9", fig9());
    fx.models.emplace("fig10_f1", fig10_f1());
    fx.models.emplace("fig10_f2", fig10_f2());
    fx.models.emplace("fig11", fig11());
    fx.models.emplace("fig12", fig12());
    fx.causal.emplace("fig4b", fig4b());
    fx.causal.emplace("totally_vicious", totally_vicious());
    fx.causal.emplace("cyl_sample", sample_frame(sample_cylinder(false), cylinder_grid()));
    fx.causal.emplace("cyl_punctured_sample", sample_frame(sample_cylinder(true), cylinder_grid()));
    fx.causal.emplace("mink1_sample",
                      sample_frame(Minkowski{1}, points({{"0", "0"}, {"1", "1"}, {"2", "0"}, {"1", "-1"},
                                                         {"3", "1/2"}, {"1/2", "2"}, {"-1", "0"}})));
    fx.causal.emplace("mink2_sample",
                      sample_frame(Minkowski{2}, points({{"0", "0", "0"}, {"1", "1", "0"}, {"1", "0", "1"},
                                                         {"2", "1/2", "1/2"}, {"1", "-1", "0"}, {"3", "0", "0"},
                                                         {"0", "2", "0"}})));
    const Frame& f1 = fx.models.at("fig10_f1").frame();
    const Frame& f2 = fx.models.at("fig10_f2").frame();
    fx.fig10_z = {{f1.index("x"), f2.index("x'")}, {f1.index("y"), f2.index("y'")}, {f1.index("z"), f2.index("y'")}};
    return fx;
}

const std::vector<Expectation>& fixture_manifest() {
    static const std::vector<Expectation> manifest = {
        {1, "fig6a", "property:transitive", true},
        {1, "fig6a", "property:serial", true},
        {1, "fig6a", "property:dense", true},
        {1, "fig6a", "property:confluent", true},
        {1, "fig6a", "validates:aaf", false},
        {1, "fig6a", "model_falsifies:aaf", true},
        {1, "fig6b", "property:reflexive", true},
        {1, "fig6b", "property:transitive", false},
        {1, "fig6b", "validates:aaf", false},
        {1, "fig6b", "model_falsifies:aaf", true},
        {1, "fig11", "fo:aD", true},
        {1, "fig11", "fo:a4", true},
        {1, "fig11", "fo:ad", true},
        {1, "fig11", "fo:aaf", true},
        {1, "fig11", "validates:aaf", true},
        {1, "fig11", "validates:aa2f", false},
        {1, "fig11", "model_falsifies:aa2f", true},
        {1, "fig12", "fo:a4", true},
        {1, "fig12", "fo:ad32", true},
        {1, "fig12", "validates:ad32", true},
        {1, "fig12", "validates:aa2f", false},
        {1, "fig12", "model_falsifies:aa2f", true},
        {4, "fig9", "property:transitive", true},
        {4, "fig9", "property:dense", true},
        {4, "fig9", "fo:aaf", true},
        {4, "fig9", "cluster_criterion", true},
        {4, "fig9", "chains:x:2", true},
        {4, "fig9", "chains:y:2", true},
        {7, "fig4b", "ladder:cntv", true},
        {7, "fig4b", "ladder:ntv", true},
        {7, "fig4b", "ladder:chronological", false},
        {7, "fig4b", "ladder:causal", false},
        {7, "fig4b", "implications", true},
        {7, "fig4b", "causal_equiv", true},
        {7, "cyl_sample", "ladder:ntv", true},
        {7, "cyl_sample", "ladder:chronological", true},
        {7, "cyl_sample", "ladder:cntv", false},
        {7, "cyl_sample", "ladder:causal", false},
        {7, "cyl_sample", "implications", true},
        {7, "cyl_sample", "causal_equiv", true},
        {7, "cyl_punctured_sample", "ladder:cntv", true},
        {7, "cyl_punctured_sample", "ladder:chronological", true},
        {7, "cyl_punctured_sample", "ladder:causal", false},
        {7, "cyl_punctured_sample", "implications", true},
        {7, "cyl_punctured_sample", "causal_equiv", true},
        {7, "mink1_sample", "ladder:causal", true},
        {7, "mink1_sample", "implications", true},
        {7, "mink1_sample", "causal_equiv", true},
        {7, "mink2_sample", "ladder:causal", true},
        {7, "mink2_sample", "implications", true},
        {7, "mink2_sample", "causal_equiv", true},
        {8, "fig10_f1", "property:past_distinguishing", true},
        {8, "fig10_f2", "property:past_distinguishing", false},
        {8, "fig10_z", "is_bisimulation", true},
        {8, "fig10_z", "coarsest_relates:x:x'", true},
        {9, "totally_vicious", "ladder:totally_vicious", true},
        {9, "totally_vicious", "collapse", true},
        {9, "totally_vicious", "implications", true},
    };
    return manifest;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto cut = s.find(sep, start);
        out.push_back(s.substr(start, cut - start));
        if (cut == std::string::npos) return out;
        start = cut + 1;
    }
}

bool ladder_flag(const LadderPosition& p, const std::string& flag) {
    const std::map<std::string, bool> flags = {
        {"totally_vicious", p.totally_vicious}, {"ntv", p.ntv},
        {"chronological", p.chronological},     {"cntv", p.cntv},
        {"causal", p.causal},                   {"past_distinguishing", p.past_distinguishing},
        {"future_distinguishing", p.future_distinguishing}, {"distinguishing", p.distinguishing},
        {"reflecting", p.reflecting}};
    auto it = flags.find(flag);
    if (it == flags.end()) throw std::invalid_argument("unknown ladder flag " + flag);
    return it->second;
}

} // namespace

bool evaluate(const Fixtures& fx, const Expectation& e) {
    const auto parts = split(e.check, ':');
    const std::string& kind = parts[0];
    if (e.fixture == "fig10_z") {
        const Model& m1 = fx.models.at("fig10_f1");
        const Model& m2 = fx.models.at("fig10_f2");
        if (kind == "is_bisimulation") return is_bisimulation(m1, m2, fx.fig10_z).holds;
        if (kind == "coarsest_relates" && parts.size() == 3) {
            const auto z = coarsest_bisimulation(m1, m2);
            const auto a = m1.frame().find(parts[1]);
            const auto b = m2.frame().find(parts[2]);
            return z && a && b && std::find(z->begin(), z->end(), std::make_pair(*a, *b)) != z->end();
        }
        throw std::invalid_argument("unknown check " + e.check);
    }
    if (auto it = fx.causal.find(e.fixture); it != fx.causal.end()) {
        const CausalFrame& cf = it->second;
        if (kind == "ladder" && parts.size() == 2) return ladder_flag(classify(cf), parts[1]);
        if (kind == "implications") return check_ladder_implications(classify(cf)).empty();
        if (kind == "causal_equiv") return causal_iff_after_irreflexive(cf).equivalent();
        if (kind == "collapse") return cf.chron() == cf.caus();
        throw std::invalid_argument("unknown check " + e.check);
    }
    const Model& m = fx.models.at(e.fixture);
    const Frame& f = m.frame();
    if (kind == "property" && parts.size() == 2) return check_property(f, frame_property_from_string(parts[1])).holds;
    if (kind == "validates" && parts.size() == 2) return frame_validates(f, axiom(axiom_from_string(parts[1]))).valid;
    if (kind == "fo" && parts.size() == 2) return fo_check(f, axiom_from_string(parts[1])).holds;
    if (kind == "model_falsifies" && parts.size() == 2)
        return truth_set(m, axiom(axiom_from_string(parts[1]))) != f.all();
    if (kind == "cluster_criterion") return aaf_cluster_criterion(f).holds;
    if (kind == "chains" && parts.size() == 3)
        return chains_of_clusters(f, f.index(parts[1])).size() == std::stoul(parts[2]);
    throw std::invalid_argument("unknown check " + e.check);
}

void write_fixtures(const Fixtures& fx, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, m] : fx.models) write_file(dir / (name + ".json"), model_to_json(m));
    for (const auto& [name, cf] : fx.causal) write_file(dir / (name + ".json"), causal_frame_to_json(cf));
    write_file(dir / "fig10_z.json",
               world_pairs_to_json(fx.fig10_z, fx.models.at("fig10_f1").frame(), fx.models.at("fig10_f2").frame()));
    nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
    for (const auto& e : fixture_manifest())
        manifest.push_back({{"criterion", e.criterion}, {"fixture", e.fixture}, {"check", e.check},
                            {"expected", e.expected}});
    write_file(dir / "manifest.json", manifest.dump(1) + "\n");
}

Fixtures load_fixtures(const std::filesystem::path& dir) {
    Fixtures fx;
    for (const auto& name : model_names) fx.models.emplace(name, parse_model(read_file(dir / (name + ".json"))));
    for (const auto& name : causal_names)
        fx.causal.emplace(name, parse_causal_frame(read_file(dir / (name + ".json"))));
    fx.fig10_z = parse_world_pairs(read_file(dir / "fig10_z.json"), fx.models.at("fig10_f1").frame(),
                                   fx.models.at("fig10_f2").frame());
    return fx;
}

} // namespace stmodal

#include "stmodal/frame_io.hpp"

#include "stmodal/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace stmodal {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::string> world_list(const json& j) {
    if (!j.contains("worlds") || !j["worlds"].is_array()) throw FormatError("missing \"worlds\" array");
    std::vector<std::string> out;
    for (const auto& w : j["worlds"]) {
        if (!w.is_string()) throw FormatError("world identifiers must be strings");
        out.push_back(w.get<std::string>());
    }
    return out;
}

bool wants_closure(const json& j) {
    if (!j.contains("close")) return false;
    for (const auto& c : j["close"]) {
        if (c != "transitive") throw FormatError("unknown closure " + c.dump());
        return true;
    }
    return false;
}

Frame relation_frame(const json& j, const std::vector<std::string>& worlds, const std::string& relation) {
    if (!j.contains("relations") || !j["relations"].is_object()) throw FormatError("missing \"relations\" object");
    const json& rels = j["relations"];
    if (!rels.contains(relation)) throw FormatError("missing relation \"" + relation + "\"");
    std::vector<Edge> edges;
    for (const auto& e : rels[relation]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw FormatError("edges are [\"from\",\"to\"] pairs");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    try {
        Frame f(worlds, edges);
        return wants_closure(j) ? f.transitive_closure() : f;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    } catch (const UnknownWorld& e) {
        throw FormatError(e.what());
    }
}

json names_of(const Frame& f, const WorldSet& s) {
    json out = json::array();
    for (World w : s.members()) out.push_back(f.name(w));
    return out;
}

json edges_of(const Frame& f) {
    json out = json::array();
    for (auto [a, b] : f.pairs()) out.push_back({f.name(a), f.name(b)});
    return out;
}

MinkPoint point_from(const json& j) {
    if (!j.is_array() || j.empty()) throw FormatError("a point is a nonempty array of rational strings");
    std::vector<Rational> coords;
    for (const auto& c : j) {
        if (!c.is_string()) throw FormatError("coordinates must be rational strings");
        try {
            coords.push_back(parse_rational(c.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    return MinkPoint(std::move(coords));
}

json point_to(const MinkPoint& p) {
    json out = json::array();
    for (const auto& c : p.coords) out.push_back(to_string(c));
    return out;
}

} // namespace

Frame parse_frame(std::string_view text, const std::string& relation) {
    const json j = parse_json(text);
    return relation_frame(j, world_list(j), relation);
}

Model parse_model(std::string_view text) {
    const json j = parse_json(text);
    Frame f = relation_frame(j, world_list(j), "R");
    Valuation val;
    if (j.contains("valuations")) {
        for (const auto& [atom, worlds] : j["valuations"].items()) {
            if (!is_identifier(atom)) throw FormatError("bad atom name '" + atom + "'");
            WorldSet s = f.empty_set();
            for (const auto& w : worlds) {
                auto idx = f.find(w.get<std::string>());
                if (!idx) throw FormatError("valuation of " + atom + " names unknown world " + w.dump());
                s.insert(*idx);
            }
            val.emplace(atom, std::move(s));
        }
    }
    return Model(std::move(f), std::move(val));
}

CausalFrame parse_causal_frame(std::string_view text, bool require_loop_property) {
    const json j = parse_json(text);
    const auto worlds = world_list(j);
    CausalFrame cf(relation_frame(j, worlds, "chron"), relation_frame(j, worlds, "after"));
    if (j.value("scope", std::string("exact")) == "sample-relative") cf.mark_sample_relative();
    if (auto bad = invariant_violations(cf, require_loop_property); !bad.empty())
        throw InvariantViolation("causal frame invariant violated: " + bad.front());
    return cf;
}

std::string frame_to_json(const Frame& f) {
    json j;
    j["worlds"] = f.names();
    j["relations"]["R"] = edges_of(f);
    return j.dump(1) + "\n";
}

std::string model_to_json(const Model& m) {
    json j;
    j["worlds"] = m.frame().names();
    j["relations"]["R"] = edges_of(m.frame());
    j["valuations"] = json::object();
    for (const auto& [atom, s] : m.valuation()) j["valuations"][atom] = names_of(m.frame(), s);
    return j.dump(1) + "\n";
}

std::string causal_frame_to_json(const CausalFrame& cf) {
    json j;
    j["worlds"] = cf.names();
    j["relations"]["chron"] = edges_of(cf.chron());
    j["relations"]["after"] = edges_of(cf.after());
    j["scope"] = cf.sample_relative() ? "sample-relative" : "exact";
    return j.dump(1) + "\n";
}

std::vector<MinkPoint> parse_points(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_array()) throw FormatError("expected an array of points");
    if (!j.empty() && j[0].is_string()) return {point_from(j)};
    std::vector<MinkPoint> out;
    for (const auto& p : j) out.push_back(point_from(p));
    return out;
}

MinkPoint parse_point_json(std::string_view text) { return point_from(parse_json(text)); }

std::string points_to_json(const std::vector<MinkPoint>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(point_to(p));
    return out.dump() + "\n";
}

WorldPairs parse_world_pairs(std::string_view text, const Frame& left, const Frame& right) {
    const json j = parse_json(text);
    WorldPairs out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw FormatError("pairs are [\"left\",\"right\"]");
        auto a = left.find(e[0].get<std::string>());
        auto b = right.find(e[1].get<std::string>());
        if (!a || !b) throw FormatError("pair " + e.dump() + " names an unknown world");
        out.emplace_back(*a, *b);
    }
    return out;
}

std::string world_pairs_to_json(const WorldPairs& z, const Frame& left, const Frame& right) {
    json out = json::array();
    for (auto [a, b] : z) out.push_back({left.name(a), right.name(b)});
    return out.dump() + "\n";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out << text;
}

} // namespace stmodal

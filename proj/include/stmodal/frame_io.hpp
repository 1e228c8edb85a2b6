#pragma once

#include "stmodal/ladder.hpp"
#include "stmodal/minkowski.hpp"
#include "stmodal/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace stmodal {

/// Malformed or inconsistent input file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Frame file: {"worlds":[...],"relations":{"R":[[a,b],...]},"close":["transitive"]}
// Model file: frame file plus "valuations":{"p":[worlds...]}
// Causal frame file: relations "chron" and "after", optional "scope":"sample-relative".

Frame parse_frame(std::string_view json_text, const std::string& relation = "R");
Model parse_model(std::string_view json_text);
/// Validates the structural invariants; throws InvariantViolation.
CausalFrame parse_causal_frame(std::string_view json_text, bool require_loop_property = false);

std::string frame_to_json(const Frame& f);
std::string model_to_json(const Model& m);
std::string causal_frame_to_json(const CausalFrame& cf);

/// [["0","1/2"],["1","-3/4"]] or a single ["0","1/2"].
std::vector<MinkPoint> parse_points(std::string_view json_text);
MinkPoint parse_point_json(std::string_view json_text);
std::string points_to_json(const std::vector<MinkPoint>& pts);

/// [["x","x'"],...] resolved against the two frames.
WorldPairs parse_world_pairs(std::string_view json_text, const Frame& left, const Frame& right);
std::string world_pairs_to_json(const WorldPairs& z, const Frame& left, const Frame& right);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

} // namespace stmodal

#pragma once

#include "stmodal/ladder.hpp"
#include "stmodal/minkowski.hpp"
#include "stmodal/model.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace stmodal {

/// Figure frames and causal frames used by the regression suite.
///
/// models: fig6a, fig6b, fig9, fig10_f1, fig10_f2, fig11, fig12 (valuations give the drawn
/// counter-models). causal: fig4b, totally_vicious, cyl_sample, cyl_punctured_sample,
/// mink1_sample, mink2_sample. fig10_z relates fig10_f1 to fig10_f2.
struct Fixtures {
    std::map<std::string, Model> models;
    std::map<std::string, CausalFrame> causal;
    WorldPairs fig10_z;
};

/// One expected verdict. Check grammar:
///   property:NAME  validates:AXIOM  fo:AXIOM  model_falsifies:AXIOM  cluster_criterion
///   chains:WORLD:N  ladder:FLAG  implications  causal_equiv  collapse
///   is_bisimulation  coarsest_relates:LEFT:RIGHT
struct Expectation {
    int criterion = 0;
    std::string fixture;
    std::string check;
    bool expected = true;
};

Fixtures builtin_fixtures();
const std::vector<Expectation>& fixture_manifest();

/// Cylinder with circumference 1, optionally punctured at (1/8, 1/8).
Cylinder sample_cylinder(bool punctured);
/// 12 points: th in {0, 1/4, 1/2, 3/4}, t = th + c for c in {0, 1/3, 2/3}.
std::vector<MinkPoint> cylinder_grid();

/// Actual outcome of a manifest check. Throws std::invalid_argument on an unknown check.
bool evaluate(const Fixtures& fx, const Expectation& e);

/// One JSON file per fixture plus fig10_z.json and manifest.json.
void write_fixtures(const Fixtures& fx, const std::filesystem::path& dir);
/// Reads the files written by write_fixtures. Throws FormatError or InvariantViolation.
Fixtures load_fixtures(const std::filesystem::path& dir);

} // namespace stmodal

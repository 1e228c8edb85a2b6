#include "cli.hpp"

#include "stmodal/clusters.hpp"
#include "stmodal/correspondence.hpp"
#include "stmodal/errors.hpp"
#include "stmodal/fixtures.hpp"
#include "stmodal/frame_io.hpp"
#include "stmodal/properties.hpp"
#include "stmodal/random.hpp"
#include "stmodal/regress.hpp"
#include "stmodal/witness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace stmodal {

namespace {

struct Options {
    std::string frame, model, formula, axiom_name, space = "mink:1", out, relation, left, right, world;
    std::string x, y, y1, y2, z, kind, points, fixtures_dir;
    std::vector<std::string> properties, only;
    std::uint64_t seed = 0, budget = default_valuation_budget;
    std::size_t count = 0;
    bool reference = false, criterion = false, on_after = false, loop_property = false, timing = false;
};

Formula formula_of(const Options& o) {
    if (!o.formula.empty() && !o.axiom_name.empty()) throw CLI::ValidationError("give --formula or --axiom, not both");
    if (!o.axiom_name.empty()) return axiom(axiom_from_string(o.axiom_name));
    if (o.formula.empty()) throw CLI::ValidationError("--formula or --axiom is required");
    return parse_formula(o.formula);
}

MinkPoint point_arg(const std::string& s, const char* flag) {
    if (s.empty()) throw CLI::ValidationError(std::string(flag) + " is required");
    return s.front() == '[' ? parse_point_json(s) : parse_point(s);
}

Frame frame_arg(const Options& o) {
    if (!o.frame.empty()) return parse_frame(read_file(o.frame));
    if (!o.model.empty()) return parse_model(read_file(o.model)).frame();
    throw CLI::ValidationError("--frame is required");
}

std::string flag(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

int cmd_parse(const Options& o, std::ostream& out) {
    const Formula f = formula_of(o);
    std::string names;
    for (const auto& a : atoms(f)) names += (names.empty() ? "" : ",") + a;
    out << "FORMULA=" << print(f) << "\nATOMS=" << names << "\nSIZE=" << f.size()
        << "\nMODAL_DEPTH=" << f.modal_depth() << "\n";
    return exit_ok;
}

int cmd_validate(const Options& o, std::ostream& out) {
    const Formula f = formula_of(o);
    if (!o.model.empty() && o.frame.empty()) {
        const Model m = parse_model(read_file(o.model));
        const WorldSet t = truth_set(m, f);
        if (t == m.frame().all()) {
            out << "VALID\n";
            return exit_ok;
        }
        out << "COUNTER world=" << m.frame().name(t.complement().first()) << "\n";
        return exit_counter;
    }
    const Frame frame = frame_arg(o);
    const ValidityVerdict v =
        o.reference ? frame_validates_reference(frame, f, o.budget) : frame_validates(frame, f, o.budget);
    out << format_verdict(frame, v) << "\n";
    return v.valid ? exit_ok : exit_counter;
}

int cmd_fo_check(const Options& o, std::ostream& out) {
    const Frame frame = frame_arg(o);
    if (o.axiom_name.empty()) throw CLI::ValidationError("--axiom is required");
    const AxiomName a = axiom_from_string(o.axiom_name);
    const Verdict v = o.reference ? fo_check_reference(frame, a) : fo_check(frame, a);
    out << "CONDITION=" << fo_condition(a) << "\n" << format_verdict(frame, v) << "\n";
    return v.holds ? exit_ok : exit_counter;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Frame frame = frame_arg(o);
    std::vector<FrameProperty> props;
    for (const auto& p : o.properties) props.push_back(frame_property_from_string(p));
    if (props.empty()) props.assign(all_frame_properties.begin(), all_frame_properties.end());
    bool all = true;
    for (FrameProperty p : props) {
        const Verdict v = check_property(frame, p);
        all = all && v.holds;
        out << to_string(p) << "=" << format_verdict(frame, v) << "\n";
    }
    return all ? exit_ok : exit_counter;
}

int cmd_clusters(const Options& o, std::ostream& out) {
    const Frame frame = frame_arg(o);
    const ClusterDecomposition d = clusters(frame);
    for (std::size_t c = 0; c < d.clusters.size(); ++c)
        out << "CLUSTER id=" << c << " worlds=" << format_set(frame, d.clusters[c])
            << " degenerate=" << flag(d.degenerate[c]) << "\n";
    for (World w = 0; w < frame.size(); ++w) {
        out << "SUCCESSORS world=" << frame.name(w) << " clusters={";
        for (std::size_t i = 0; i < d.successor_clusters[w].size(); ++i)
            out << (i ? "," : "") << d.successor_clusters[w][i];
        out << "}\n";
    }
    if (!o.world.empty()) {
        const auto chains = chains_of_clusters(frame, frame.index(o.world));
        for (std::size_t i = 0; i < chains.size(); ++i) {
            out << "CHAIN world=" << o.world << " index=" << i << " clusters=";
            for (std::size_t k = 0; k < chains[i].clusters.size(); ++k)
                out << (k ? " " : "") << format_set(frame, chains[i].clusters[k]);
            out << "\n";
        }
    }
    if (o.criterion) {
        const Verdict v = aaf_cluster_criterion(frame);
        out << "CRITERION=" << format_verdict(frame, v) << "\n";
        return v.holds ? exit_ok : exit_counter;
    }
    return exit_ok;
}

int cmd_bisim(const Options& o, std::ostream& out) {
    if (o.left.empty() || o.right.empty()) throw CLI::ValidationError("--left and --right are required");
    const Model m1 = parse_model(read_file(o.left));
    const Model m2 = parse_model(read_file(o.right));
    if (!o.relation.empty()) {
        const WorldPairs z = parse_world_pairs(read_file(o.relation), m1.frame(), m2.frame());
        const BisimulationVerdict v = is_bisimulation(m1, m2, z);
        if (v.holds) {
            out << "BISIMULATION\n";
            return exit_ok;
        }
        out << "COUNTER clause=" << v.clause;
        if (v.clause != "nonempty")
            out << " pair=" << m1.frame().name(v.pair.first) << "," << m2.frame().name(v.pair.second);
        if (v.clause == "forth") out << " step=" << m1.frame().name(v.step);
        if (v.clause == "back") out << " step=" << m2.frame().name(v.step);
        if (v.clause == "atoms") out << " atom=" << v.atom;
        out << "\n";
        return exit_counter;
    }
    const auto z = coarsest_bisimulation(m1, m2);
    if (!z) {
        out << "EMPTY\n";
        return exit_counter;
    }
    for (auto [a, b] : *z) out << "PAIR " << m1.frame().name(a) << " " << m2.frame().name(b) << "\n";
    return exit_ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
    if (o.frame.empty()) throw CLI::ValidationError("--frame is required");
    const CausalFrame cf = parse_causal_frame(read_file(o.frame), o.loop_property);
    const LadderPosition pos = classify(cf, {o.on_after, o.loop_property});
    out << format_position(pos);
    const auto bad = check_ladder_implications(pos);
    out << "implications=" << (bad.empty() ? "OK" : "VIOLATED");
    for (const auto& b : bad) out << " " << b;
    const CausalityEquivalence eq = causal_iff_after_irreflexive(cf);
    out << "\ncaus_antisymmetric=" << flag(eq.caus_antisymmetric) << "\nafter_irreflexive="
        << flag(eq.after_irreflexive) << "\n";
    return bad.empty() ? exit_ok : exit_counter;
}

int cmd_relate(const Options& o, std::ostream& out) {
    const Space space = parse_space(o.space);
    const MinkPoint x = point_arg(o.x, "--x");
    const MinkPoint y = point_arg(o.y, "--y");
    const RelationVerdict v = relate(space, x, y);
    out << strongest_relation(v, same_point(space, x, y)) << "\nchron=" << flag(v.chron) << "\ncaus=" << flag(v.caus)
        << "\nhorismos=" << flag(v.horismos) << "\nafter=" << flag(v.after) << "\n";
    return exit_ok;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const MinkPoint x = point_arg(o.x, "--x");
    const MinkPoint y1 = point_arg(o.y1, "--y1");
    const MinkPoint y2 = point_arg(o.y2, "--y2");
    const MinkPoint z = point_arg(o.z, "--z");
    MinkPoint t;
    if (o.kind == "aaf") t = aaf_witness(parse_space(o.space), x, point_arg(o.y, "--y"), y1, y2, z);
    else if (o.kind == "aa2f") t = aa2f_witness_2d(x, y1, y2, z);
    else throw CLI::ValidationError("--kind must be aaf or aa2f");
    out << "t=" << to_string(t) << "\n";
    return exit_ok;
}

// A certificate proves the formula fails at x, so it is reported as a certified failure.
int cmd_certify(const Options& o, std::ostream& out) {
    const NoWitnessCertificate cert = no_witness_certificate(point_arg(o.x, "--x"), point_arg(o.y1, "--y1"),
                                                             point_arg(o.y2, "--y2"), point_arg(o.z, "--z"));
    out << format_certificate(cert);
    return cert.certified ? exit_counter : exit_ok;
}

int cmd_sample(const Options& o, std::ostream& out) {
    const Space space = parse_space(o.space);
    std::vector<MinkPoint> pts;
    if (!o.points.empty()) {
        pts = parse_points(o.points.front() == '[' ? o.points : read_file(o.points));
    } else {
        if (o.count == 0) throw CLI::ValidationError("--count or --points is required");
        Rng rng(o.seed);
        const std::size_t n = spatial_dim(space);
        for (int attempt = 0; pts.size() < o.count; ++attempt) {
            if (attempt > 1000000) throw std::invalid_argument("could not draw enough distinct points");
            MinkPoint p = random_point(rng, n);
            const auto* cyl = std::get_if<Cylinder>(&space);
            auto clash = [&](const MinkPoint& q) { return same_point(space, p, q); };
            if (cyl && std::any_of(cyl->punctures.begin(), cyl->punctures.end(), clash)) continue;
            if (std::any_of(pts.begin(), pts.end(), clash)) continue;
            pts.push_back(std::move(p));
        }
    }
    const CausalFrame cf = sample_frame(space, pts);
    if (o.out.empty()) {
        out << causal_frame_to_json(cf);
        return exit_ok;
    }
    write_file(o.out, causal_frame_to_json(cf));
    out << "WORLDS=" << cf.size() << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i) out << cf.names()[i] << "=" << to_string(pts[i]) << "\n";
    return exit_ok;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
    const Fixtures fx = builtin_fixtures();
    if (!o.out.empty()) {
        write_fixtures(fx, o.out);
        out << "WROTE " << fx.models.size() + fx.causal.size() + 2 << " files to " << o.out << "\n";
        return exit_ok;
    }
    for (const auto& [name, m] : fx.models) out << "MODEL " << name << " worlds=" << m.frame().size() << "\n";
    for (const auto& [name, cf] : fx.causal) out << "CAUSAL " << name << " worlds=" << cf.size() << "\n";
    for (const auto& e : fixture_manifest())
        out << "EXPECT criterion=" << e.criterion << " fixture=" << e.fixture << " check=" << e.check
            << " expected=" << flag(e.expected) << "\n";
    return exit_ok;
}

int cmd_regress(const Options& o, std::ostream& out) {
    RegressOptions ro;
    ro.seed = o.seed;
    ro.only = o.only;
    if (!o.fixtures_dir.empty()) ro.fixtures_dir = o.fixtures_dir;
    bool all = true;
    for (const auto& r : run_regress(ro)) {
        out << format_result(r, o.timing);
        all = all && r.passed();
    }
    return all ? exit_ok : exit_counter;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modal logic of spacetime causal structures"};
    app.require_subcommand(1, 1);
    Options o;

    auto formula_flags = [&](CLI::App* c) {
        c->add_option("--formula", o.formula, "formula in ASCII syntax");
        c->add_option("--axiom", o.axiom_name, "catalog axiom, e.g. @aaf");
    };
    auto frame_flags = [&](CLI::App* c) {
        c->add_option("--frame", o.frame, "frame file");
        c->add_option("--model", o.model, "model file");
    };
    auto point_flags = [&](CLI::App* c, bool with_y) {
        c->add_option("--x", o.x, "point as t,x1,... or JSON array");
        if (with_y) c->add_option("--y", o.y);
        c->add_option("--y1", o.y1);
        c->add_option("--y2", o.y2);
        c->add_option("--z", o.z);
    };

    std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* c = app.add_subcommand(name, help);
        handlers[c] = fn;
        return c;
    };

    auto* parse = sub("parse", "parse and pretty-print a formula", cmd_parse);
    formula_flags(parse);

    auto* validate = sub("validate", "frame validity by valuation enumeration", cmd_validate);
    frame_flags(validate);
    formula_flags(validate);
    validate->add_option("--budget", o.budget, "maximum number of valuations");
    validate->add_flag("--reference", o.reference, "use the serial reference evaluator");

    auto* fo = sub("fo-check", "check the first-order correspondent of an axiom", cmd_fo_check);
    frame_flags(fo);
    fo->add_option("--axiom", o.axiom_name, "catalog axiom");
    fo->add_flag("--reference", o.reference, "use the serial reference checker");

    auto* check = sub("check", "check frame properties", cmd_check);
    frame_flags(check);
    check->add_option("--property", o.properties, "property name (repeatable; default all)");

    auto* cl = sub("clusters", "cluster decomposition and chains of clusters", cmd_clusters);
    frame_flags(cl);
    cl->add_option("--world", o.world, "print chains of clusters at this world");
    cl->add_flag("--criterion", o.criterion, "evaluate the successor-cluster criterion");

    auto* bisim = sub("bisim", "bisimulation check or coarsest bisimulation", cmd_bisim);
    bisim->add_option("--left", o.left, "left model file")->required();
    bisim->add_option("--right", o.right, "right model file")->required();
    bisim->add_option("--relation", o.relation, "JSON pair list to verify");

    auto* classify_cmd = sub("classify", "causal ladder position of a causal frame", cmd_classify);
    classify_cmd->add_option("--frame", o.frame, "causal frame file");
    classify_cmd->add_flag("--distinguish-on-after", o.on_after, "evaluate distinguishing on after");
    classify_cmd->add_flag("--require-loop-property", o.loop_property, "enforce the loop property");

    auto* rel = sub("relate", "causal relations between two points", cmd_relate);
    rel->add_option("--space", o.space, "mink:N or cyl:L=Q[,puncture=t,th]");
    rel->add_option("--x", o.x);
    rel->add_option("--y", o.y);

    auto* wit = sub("witness", "construct an after-formula witness", cmd_witness);
    wit->add_option("--kind", o.kind, "aaf or aa2f")->required();
    wit->add_option("--space", o.space, "Minkowski space for aaf");
    point_flags(wit, true);

    auto* cert = sub("certify-no-witness", "exact no-witness certificate on a null segment", cmd_certify);
    point_flags(cert, false);

    auto* sample = sub("sample", "sample a causal frame from a spacetime", cmd_sample);
    sample->add_option("--space", o.space, "mink:N or cyl:L=Q[,puncture=t,th]");
    sample->add_option("--count", o.count, "number of random points");
    sample->add_option("--seed", o.seed, "random seed");
    sample->add_option("--points", o.points, "JSON point list, inline or a file, instead of random points");
    sample->add_option("--out", o.out, "output file");

    auto* fixtures = sub("fixtures", "list or write the fixture catalog", cmd_fixtures);
    fixtures->add_option("--out", o.out, "directory to write fixture files into");

    auto* regress = sub("regress", "run the acceptance criteria", cmd_regress);
    regress->add_option("--only", o.only, "criterion id, name or module")->delimiter(',');
    regress->add_option("--seed", o.seed, "random seed");
    regress->add_option("--fixtures", o.fixtures_dir, "fixture directory written by `fixtures --out`");
    regress->add_flag("--timing", o.timing, "append wall-clock times");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "ERROR " << e.what() << "\n";
        return exit_usage;
    }

    auto* chosen = app.get_subcommands().front();
    try {
        std::ostringstream report;
        const int code = handlers.at(chosen)(o, report);
        out << report.str();
        return code;
    } catch (const SyntaxError& e) {
        err << "ERROR syntax offset=" << e.offset() << " " << e.what() << "\n";
    } catch (const BudgetExceeded& e) {
        err << "BUDGET_EXCEEDED required_log2=" << e.required_log2() << " cap=" << o.budget << "\n";
        return exit_budget;
    } catch (const WitnessSearchExhausted& e) {
        err << "WITNESS_NOT_FOUND " << e.what() << "\n";
        return exit_counter;
    } catch (const std::exception& e) {
        err << "ERROR " << e.what() << "\n";
    }
    return exit_usage;
}

} // namespace stmodal

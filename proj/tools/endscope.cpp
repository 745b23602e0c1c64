// endscope — command-line surface over the library.
//
// Exit codes: 0 success, 2 invalid configuration, 3 exploration/depth
// errors (not-explored vertices, non-metric rays, classification
// conflicts).
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "endscope/endscope.hpp"

namespace {

using endscope::report::Json;

endscope::Notion parse_notion(const std::string& s) {
    if (s == "vertex") return endscope::Notion::VertexEnd;
    if (s == "edge") return endscope::Notion::EdgeEnd;
    if (s == "metric") return endscope::Notion::MetricEnd;
    throw endscope::InvalidConfigError("unknown notion: " + s + " (vertex|edge|metric)");
}

endscope::BudgetSchedule budget_from(int budget) {
    return budget > 0 ? endscope::constant_budget(static_cast<std::size_t>(budget))
                      : endscope::default_budget();
}

// Cut spec grammar: "<shape>" | "<shape>:<int>" | "<shape>:<sparam>".
endscope::Carrier parse_cut_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string shape = spec.substr(0, colon);
    if (colon == std::string::npos) return endscope::Carrier::gallery_shape(shape);
    std::string value = spec.substr(colon + 1);
    if (auto n = endscope::gallery::parse_int(value))
        return endscope::Carrier::gallery_shape(shape, *n);
    return endscope::Carrier::gallery_shape(shape, 0, value);
}

void emit(const Json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // Text mode: a flat, human-readable rendering of the same data.
    std::function<void(const Json&, const std::string&)> walk_json =
        [&](const Json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (const auto& [key, value] : node.items())
                    walk_json(value, prefix.empty() ? key : prefix + "." + key);
            } else if (node.is_array()) {
                std::cout << prefix << ": " << node.dump() << "\n";
            } else {
                std::cout << prefix << ": " << (node.is_string() ? node.get<std::string>()
                                                                 : node.dump())
                          << "\n";
            }
        };
    walk_json(j, "");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(s.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"endscope — ends of lazily explored infinite graphs"};
    app.require_subcommand(1);

    std::string graph_spec = "ladder";
    int depth = 8;
    int budget = 0; // 0 = default schedule (budget grows with depth)
    std::uint64_t seed = 1;
    std::string notion_str = "vertex";
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd, bool with_notion) {
        cmd->add_option("--graph", graph_spec, "graph spec (see --help-graphs)");
        cmd->add_option("--depth", depth, "exploration depth");
        cmd->add_option("--budget", budget, "constant per-vertex enumeration budget (0 = depth)");
        cmd->add_flag("--json", as_json, "machine-readable output");
        if (with_notion) cmd->add_option("--notion", notion_str, "vertex|edge|metric");
    };

    auto* cmd_explore = app.add_subcommand("explore", "build a window and report its shape");
    add_common(cmd_explore, false);

    auto* cmd_ends = app.add_subcommand("ends", "count ends at depth");
    add_common(cmd_ends, true);

    std::string rays_arg;
    auto* cmd_separate = app.add_subcommand("separate", "separation verdict for two named rays");
    add_common(cmd_separate, true);
    cmd_separate->add_option("--rays", rays_arg, "two ray names, comma separated")->required();

    std::string seq_name;
    auto* cmd_classify = app.add_subcommand("classify", "Theorem-style sequence classification");
    add_common(cmd_classify, false);
    cmd_classify->add_option("--seq", seq_name, "named sequence")->required();

    std::string center_token;
    int ball_radius = 1;
    auto* cmd_star = app.add_subcommand("star", "star-ball score of K(center, radius)");
    add_common(cmd_star, false);
    cmd_star->add_option("--center", center_token, "ball center token (default: root)");
    cmd_star->add_option("--radius", ball_radius, "ball radius");

    auto* cmd_witness = app.add_subcommand("witness", "infinite-diameter witness search");
    add_common(cmd_witness, false);

    std::string cut_spec;
    auto* cmd_cut = app.add_subcommand("cut", "classify a gallery cut shape");
    add_common(cmd_cut, false);
    cmd_cut->add_option("--cut", cut_spec, "shape spec, e.g. right-half:1, cone:o.2")->required();

    std::string qi_name;
    int samples = 500;
    bool qi_mutant = false;
    auto* cmd_qi = app.add_subcommand("qi", "verify a quasi-isometry preset");
    cmd_qi->add_option("--qi", qi_name, "preset: tree2-identity | ladder-line")->required();
    cmd_qi->add_option("--samples", samples, "sampled checks per axiom");
    cmd_qi->add_option("--seed", seed, "rng seed");
    cmd_qi->add_option("--depth", depth, "window depth for sample pools");
    cmd_qi->add_flag("--mutant", qi_mutant, "verify the constant-map mutant instead");
    cmd_qi->add_flag("--json", as_json, "machine-readable output");

    std::string mu_arg = "uniform4";
    int steps = 1000, traj = 100, prefix_depth = 1;
    auto* cmd_walk = app.add_subcommand("walk", "random walk on a free-group Cayley graph");
    cmd_walk->add_option("--graph", graph_spec, "free:r=<int>");
    cmd_walk->add_option("--mu", mu_arg, "uniform4 or a measure file of (word, weight) lines");
    cmd_walk->add_option("--steps", steps, "steps per trajectory");
    cmd_walk->add_option("--traj", traj, "number of trajectories");
    cmd_walk->add_option("--seed", seed, "rng seed");
    cmd_walk->add_option("--prefix", prefix_depth, "prefix depth for stabilization");
    cmd_walk->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_explore->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            auto wnd = endscope::explore(g.graph, depth, budget_from(budget));
            Json j = endscope::report::envelope("explore");
            j["graph"] = g.tag;
            j["depth"] = depth;
            j["window"] = endscope::report::json_of(wnd);
            emit(j, as_json);
        } else if (cmd_ends->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            auto notion = parse_notion(notion_str);
            auto count = endscope::gallery::count_ends(g, notion, depth, budget_from(budget));
            Json j = endscope::report::envelope("ends");
            j["graph"] = g.tag;
            j["lower_bound"] = count.lower_bound;
            j["status"] = endscope::to_string(count.status);
            j["notion"] = endscope::to_string(notion);
            j["depth"] = depth;
            emit(j, as_json);
        } else if (cmd_separate->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            auto names = split_csv(rays_arg);
            if (names.size() != 2)
                throw endscope::InvalidConfigError("--rays needs exactly two names");
            auto r1 = g.ray(names[0]);
            auto r2 = g.ray(names[1]);
            auto notion = parse_notion(notion_str);
            auto verdict = endscope::separation_verdict(r1, r2, notion, depth, g.graph,
                                                        g.oracle.get(), budget_from(budget));
            Json j = endscope::report::envelope("separate");
            j["graph"] = g.tag;
            j["rays"] = Json::array({names[0], names[1]});
            j["verdict"] = endscope::report::json_of(verdict);
            emit(j, as_json);
        } else if (cmd_classify->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            auto cls = endscope::classify_sequence(g.sequence(seq_name), g.graph, depth,
                                                   budget_from(budget));
            Json j = endscope::report::envelope("classify");
            j["graph"] = g.tag;
            j["sequence"] = seq_name;
            j["classification"] = endscope::report::json_of(cls);
            emit(j, as_json);
        } else if (cmd_star->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            auto wnd = endscope::explore(g.graph, depth, budget_from(budget));
            endscope::VertexId center =
                center_token.empty() ? wnd.origin() : endscope::VertexId(center_token);
            auto rep = endscope::star_ball_score(wnd, center, ball_radius);
            Json j = endscope::report::envelope("star");
            j["graph"] = g.tag;
            j["report"] = endscope::report::json_of(rep);
            emit(j, as_json);
        } else if (cmd_witness->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            auto w = endscope::infinite_diameter_witness(g.graph, depth, budget_from(budget));
            Json j = endscope::report::envelope("witness");
            j["graph"] = g.tag;
            j["witness"] = endscope::report::json_of(w);
            emit(j, as_json);
        } else if (cmd_cut->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            auto wnd = endscope::explore(g.graph, depth, budget_from(budget));
            auto cc = endscope::classify_cut(wnd, parse_cut_spec(cut_spec), g.oracle.get());
            Json j = endscope::report::envelope("cut");
            j["graph"] = g.tag;
            j["cut"] = endscope::report::json_of(cc);
            j["depth"] = depth;
            emit(j, as_json);
        } else if (cmd_qi->parsed()) {
            auto preset = endscope::qi_preset(qi_name);
            auto spec = preset.spec;
            if (qi_mutant) {
                auto root_y = spec.codomain->root;
                spec.phi = [root_y](const endscope::VertexId&) { return root_y; };
                spec.name += "+constant-phi";
            }
            auto wx = endscope::explore(spec.domain, depth);
            auto wy = endscope::explore(spec.codomain, depth);
            auto rep = endscope::qi_verify(spec, wx, wy, samples, seed);
            auto lemma11 = endscope::lemma11_check(spec, wx, std::max(1, samples / 2), seed + 1);
            Json j = endscope::report::envelope("qi");
            j["preset"] = spec.name;
            j["depth"] = depth;
            j["report"] = endscope::report::json_of(rep);
            j["lemma11"] = Json{{"checked_sets", lemma11.checked_sets},
                                {"violations", lemma11.violations}};
            emit(j, as_json);
        } else if (cmd_walk->parsed()) {
            auto g = endscope::gallery::make(graph_spec);
            if (graph_spec.rfind("free", 0) != 0)
                throw endscope::InvalidConfigError("walk: --graph must be a free-group spec");
            int r = 1;
            if (auto pos = g.tag.find("r="); pos != std::string::npos)
                r = static_cast<int>(*endscope::gallery::parse_int(
                    g.tag.substr(pos + 2, g.tag.find(',', pos) - pos - 2)));
            endscope::StepMeasure mu;
            if (mu_arg == "uniform4") {
                mu = endscope::StepMeasure::uniform4();
            } else {
                std::ifstream in(mu_arg);
                if (!in) throw endscope::InvalidConfigError("cannot open measure file: " + mu_arg);
                std::stringstream buffer;
                buffer << in.rdbuf();
                mu = endscope::StepMeasure::from_text(buffer.str());
            }
            endscope::SimulateOptions opts;
            opts.prefix_depth = std::max(prefix_depth, 1);
            auto trajectories = endscope::simulate(mu, r, steps, traj, seed, opts);
            mu.validate(r);
            auto rep = endscope::convergence_report(trajectories, mu, r, opts.prefix_depth);
            Json j = endscope::report::envelope("walk");
            j["graph"] = g.tag;
            j["mu"] = mu_arg;
            j["seed"] = seed;
            j["report"] = endscope::report::json_of(rep);
            emit(j, as_json);
        }
    } catch (const endscope::InvalidConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const endscope::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

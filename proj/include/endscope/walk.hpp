// walk.hpp — random walk on the free-group Cayley graph over A^r, measured
// through escape distances and prefix-cone stabilization.
//
// Prefix cones (all reduced words extending a fixed prefix) are the
// canonical metric cuts of this graph, so "the walk converges to a proper
// metric end" is operationalized as: the length-k prefix of Z_n is
// eventually constant within the run. Absence of stabilization is reported,
// never extrapolated.
//
// Determinism: trajectory i draws from CounterRng(seed).split(i), so runs
// are reproducible and independent of thread scheduling.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "endscope/errors.hpp"
#include "endscope/rng.hpp"
#include "endscope/word.hpp"

namespace endscope {

struct StepMeasure {
    std::vector<std::pair<Word, double>> support;
    // Set by validate(): no two support words w1, w2 with
    // {w1, w2, w1^-1, w2^-1} four distinct elements — the embedded-walk
    // device behind the almost-sure-convergence argument is unavailable,
    // so reports are tagged as outside the theorem's hypothesis.
    bool missing_embedded_walk = false;

    static StepMeasure uniform4() {
        StepMeasure m;
        m.support = {{{1}, 0.25}, {{2}, 0.25}, {{-1}, 0.25}, {{-2}, 0.25}};
        return m;
    }

    // Text format: one "<word-token> <weight>" pair per line; '#' comments.
    static StepMeasure from_text(const std::string& text) {
        StepMeasure m;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string token;
            double weight = 0;
            if (!(ls >> token)) continue;
            if (!(ls >> weight)) throw InvalidConfigError("measure line needs a weight: " + line);
            m.support.emplace_back(parse_word_token(token), weight);
        }
        return m;
    }

    void validate(int r) {
        if (support.empty()) throw InvalidConfigError("measure: empty support");
        double total = 0;
        for (const auto& [w, p] : support) {
            if (p <= 0) throw InvalidConfigError("measure: weights must be positive");
            if (w.empty() || w.size() > static_cast<std::size_t>(r))
                throw InvalidConfigError("measure: support word '" + word_token(w) +
                                         "' has length outside [1, r]");
            if (!is_reduced(w))
                throw InvalidConfigError("measure: support word not reduced: " + word_token(w));
            total += p;
        }
        if (total < 1.0 - 1e-9 || total > 1.0 + 1e-9)
            throw InvalidConfigError("measure: weights sum to " + std::to_string(total) +
                                     ", not 1");
        missing_embedded_walk = true;
        for (std::size_t i = 0; i < support.size() && missing_embedded_walk; ++i)
            for (std::size_t j = i + 1; j < support.size(); ++j) {
                const Word& w1 = support[i].first;
                const Word& w2 = support[j].first;
                if (w2 != w1 && w2 != inverse(w1)) {
                    missing_embedded_walk = false;
                    break;
                }
            }
    }
};

struct Trajectory {
    int index = 0;
    std::vector<std::int32_t> step_indices; // into the measure support
    std::vector<std::int32_t> escape;       // d(o, Z_n) = ceil(|Z_n| / r), n = 1..steps
    Word final_position;
    // prefix_stabilization[k-1] = first index after which the length-k
    // prefix of Z_n is constant, or -1 (NotStabilizedWithinRun).
    std::vector<int> prefix_stabilization;
    std::vector<Word> positions; // only with record_positions
};

struct SimulateOptions {
    int prefix_depth = 8;
    bool record_positions = false;
    int threads = 0; // 0: use ENDSCOPE_THREADS or hardware concurrency
};

inline int thread_cap(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ENDSCOPE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

inline Trajectory run_trajectory(const StepMeasure& measure, const std::vector<double>& cumulative,
                                 int r, int steps, std::uint64_t seed, int index,
                                 const SimulateOptions& opts) {
    Trajectory t;
    t.index = index;
    t.step_indices.reserve(static_cast<std::size_t>(steps));
    t.escape.reserve(static_cast<std::size_t>(steps));
    CounterRng rng = CounterRng(seed).split(static_cast<std::uint64_t>(index));

    Word pos;
    const int K = opts.prefix_depth;
    std::vector<Letter> tracked(static_cast<std::size_t>(K), 0); // 0 = undefined
    std::vector<int> last_settle(static_cast<std::size_t>(K), 0);

    for (int n = 1; n <= steps; ++n) {
        double u = rng.next_unit();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = std::min<std::size_t>(
            static_cast<std::size_t>(it - cumulative.begin()), measure.support.size() - 1);
        pos = reduce_concat(pos, measure.support[idx].first);

        t.step_indices.push_back(static_cast<std::int32_t>(idx));
        t.escape.push_back(static_cast<std::int32_t>(
            (pos.size() + static_cast<std::size_t>(r) - 1) / static_cast<std::size_t>(r)));
        for (int k = 1; k <= K; ++k) {
            Letter now = pos.size() >= static_cast<std::size_t>(k)
                             ? pos[static_cast<std::size_t>(k - 1)]
                             : 0;
            if (now != tracked[static_cast<std::size_t>(k - 1)]) {
                tracked[static_cast<std::size_t>(k - 1)] = now;
                last_settle[static_cast<std::size_t>(k - 1)] = n;
            }
        }
        if (opts.record_positions) t.positions.push_back(pos);
    }
    t.final_position = std::move(pos);
    t.prefix_stabilization.assign(static_cast<std::size_t>(K), -1);
    for (int k = 1; k <= K; ++k) {
        if (tracked[static_cast<std::size_t>(k - 1)] != 0)
            t.prefix_stabilization[static_cast<std::size_t>(k - 1)] =
                last_settle[static_cast<std::size_t>(k - 1)];
    }
    return t;
}

} // namespace detail

// Runs `trajectories` independent walks of `steps` steps each. Trajectories
// are embarrassingly parallel; results land in index order regardless of
// the thread count, so output is deterministic given the seed.
inline std::vector<Trajectory> simulate(StepMeasure measure, int r, int steps, int trajectories,
                                        std::uint64_t seed, SimulateOptions opts = {}) {
    if (steps < 1 || trajectories < 1)
        throw InvalidConfigError("simulate: steps and trajectories must be >= 1");
    if (r < 1) throw InvalidConfigError("simulate: r must be >= 1");
    measure.validate(r);

    std::vector<double> cumulative;
    cumulative.reserve(measure.support.size());
    double acc = 0;
    for (const auto& [w, p] : measure.support) {
        acc += p;
        cumulative.push_back(acc);
    }

    std::vector<Trajectory> out(static_cast<std::size_t>(trajectories));
    const int workers = std::min(thread_cap(opts.threads), trajectories);
    if (workers <= 1) {
        for (int i = 0; i < trajectories; ++i)
            out[static_cast<std::size_t>(i)] =
                detail::run_trajectory(measure, cumulative, r, steps, seed, i, opts);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < trajectories; i += workers)
                out[static_cast<std::size_t>(i)] =
                    detail::run_trajectory(measure, cumulative, r, steps, seed, i, opts);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

struct ConvergenceReport {
    int trajectories = 0;
    int steps = 0;
    int prefix_depth = 1;
    double stabilized_fraction = 0;  // length-k prefix settled within the run
    double escape_fraction = 0;      // Z_final != identity
    double mean_length_ratio = 0;    // mean |Z_steps| / steps
    std::map<std::string, int> first_letter_counts; // stabilized depth-1 prefixes
    bool outside_theorem_hypothesis = false;
};

inline ConvergenceReport convergence_report(const std::vector<Trajectory>& trajectories,
                                            const StepMeasure& measure, int r, int prefix_depth) {
    if (trajectories.empty()) throw InvalidConfigError("convergence_report: no trajectories");
    if (prefix_depth < 1) throw InvalidConfigError("convergence_report: prefix depth must be >= 1");
    ConvergenceReport rep;
    rep.trajectories = static_cast<int>(trajectories.size());
    rep.steps = static_cast<int>(trajectories.front().escape.size());
    rep.prefix_depth = prefix_depth;
    rep.outside_theorem_hypothesis = measure.missing_embedded_walk;
    (void)r;

    int stabilized = 0, escaped = 0;
    double ratio_sum = 0;
    for (const auto& t : trajectories) {
        if (static_cast<int>(t.prefix_stabilization.size()) < prefix_depth)
            throw InvalidConfigError("convergence_report: trajectories lack prefix depth " +
                                     std::to_string(prefix_depth));
        if (t.prefix_stabilization[static_cast<std::size_t>(prefix_depth - 1)] >= 0) ++stabilized;
        if (!t.final_position.empty()) ++escaped;
        ratio_sum += static_cast<double>(t.final_position.size()) /
                     static_cast<double>(t.escape.size());
        if (!t.final_position.empty())
            ++rep.first_letter_counts[word_token({t.final_position.front()})];
    }
    rep.stabilized_fraction = static_cast<double>(stabilized) / rep.trajectories;
    rep.escape_fraction = static_cast<double>(escaped) / rep.trajectories;
    rep.mean_length_ratio = ratio_sum / rep.trajectories;
    return rep;
}

} // namespace endscope

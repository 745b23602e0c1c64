// gallery/registry.hpp — the gallery front door: tag parsing, construction,
// ground truth and end counting.
//
// Graph spec grammar (the CLI --graph argument):
//   ladder | star-paths | x1 | x2
//   treeplus2:b=<int|inf>          (bare "treeplus2" means b=inf)
//   kn-chain:variant=<5a|5b|5c|5d>
//   free:r=<int>                   (bare "free" means r=1)
#pragma once

#include "endscope/gallery/free_group.hpp"
#include "endscope/gallery/kn_chain.hpp"
#include "endscope/gallery/ladder.hpp"
#include "endscope/gallery/line.hpp"
#include "endscope/gallery/star_paths.hpp"
#include "endscope/gallery/tree_plus2.hpp"
#include "endscope/gallery/x_graphs.hpp"

namespace endscope::gallery {

inline GalleryGraph make(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "ladder") return make_ladder();
    if (head == "star-paths") return make_star_of_paths();
    if (head == "x1") return make_x1();
    if (head == "x2") return make_x2();
    if (head == "line") return make_line();
    if (head == "treeplus2" || head == "tree") {
        long long b = 0;
        if (!params.empty()) {
            if (params.rfind("b=", 0) != 0)
                throw InvalidConfigError("treeplus2: expected b=<int|inf>, got " + params);
            std::string val = params.substr(2);
            if (val != "inf") {
                auto parsed = parse_int(val);
                if (!parsed) throw InvalidConfigError("treeplus2: bad branching " + val);
                b = *parsed;
            }
        }
        return head == "tree" ? make_tree(b) : make_tree_plus2(b);
    }
    if (head == "kn-chain") {
        KnVariant variant = KnVariant::V5d;
        long long level_size = 0;
        bool have_variant = false;
        std::size_t i = 0;
        while (i < params.size()) {
            std::size_t j = params.find(',', i);
            if (j == std::string::npos) j = params.size();
            std::string kv = params.substr(i, j - i);
            if (kv.rfind("variant=", 0) == 0) {
                std::string v = kv.substr(8);
                if (v == "5a") variant = KnVariant::V5a;
                else if (v == "5b") variant = KnVariant::V5b;
                else if (v == "5c") variant = KnVariant::V5c;
                else if (v == "5d") variant = KnVariant::V5d;
                else throw InvalidConfigError("kn-chain: unknown variant " + v);
                have_variant = true;
            } else if (kv.rfind("b=", 0) == 0) {
                auto parsed = parse_int(kv.substr(2));
                if (!parsed) throw InvalidConfigError("kn-chain: bad level size " + kv);
                level_size = *parsed;
            } else {
                throw InvalidConfigError("kn-chain: unknown parameter " + kv);
            }
            i = j + 1;
        }
        if (!have_variant)
            throw InvalidConfigError("kn-chain: variant=<5a|5b|5c|5d> is required");
        return make_kn_chain(variant, level_size);
    }
    if (head == "free") {
        int r = 1, gens = 2;
        std::size_t i = 0;
        while (i < params.size()) {
            std::size_t j = params.find(',', i);
            if (j == std::string::npos) j = params.size();
            std::string kv = params.substr(i, j - i);
            if (kv.rfind("r=", 0) == 0) {
                auto parsed = parse_int(kv.substr(2));
                if (!parsed || *parsed < 1) throw InvalidConfigError("free: bad r in " + kv);
                r = static_cast<int>(*parsed);
            } else if (kv.rfind("gens=", 0) == 0) {
                std::string v = kv.substr(5);
                if (v == "inf") {
                    gens = 0;
                } else {
                    auto parsed = parse_int(v);
                    if (!parsed) throw InvalidConfigError("free: bad gens in " + kv);
                    gens = static_cast<int>(*parsed);
                }
            } else {
                throw InvalidConfigError("free: unknown parameter " + kv);
            }
            i = j + 1;
        }
        return make_free_group(r, gens);
    }
    throw InvalidConfigError("unknown graph spec: " + spec);
}

inline GroundTruth ground_truth(const std::string& spec) { return make(spec).truth; }

// End counting against the registry: named-ray representatives, pairwise
// separation at depth, status certified by the stored ground truth.
inline EndCount count_ends(const GalleryGraph& g, Notion notion, int depth,
                           BudgetSchedule budget = default_budget()) {
    std::vector<Ray> reps;
    for (const auto& [name, ray] : g.named_rays) reps.push_back(ray);
    std::optional<int> truth;
    if (auto it = g.truth.end_counts.find(notion); it != g.truth.end_counts.end())
        truth = it->second;
    return count_ends_at_depth(g.graph, g.oracle.get(), std::move(reps), truth, notion, depth,
                               std::move(budget));
}

// The instances the acceptance and property suites run over.
inline std::vector<std::string> registry_tags() {
    return {"ladder",
            "star-paths",
            "x1",
            "x2",
            "treeplus2:b=inf",
            "treeplus2:b=3",
            "kn-chain:variant=5a",
            "kn-chain:variant=5b",
            "kn-chain:variant=5c",
            "kn-chain:variant=5d",
            "free:r=1",
            "free:r=2"};
}

} // namespace endscope::gallery

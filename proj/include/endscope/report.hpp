// report.hpp — JSON serialization of analysis results (schema endscope/1).
//
// Every report embeds its depth stamp and certainty tags; json output for a
// fixed configuration is byte-identical across runs.
#pragma once

#include <json.hpp>

#include "endscope/cuts.hpp"
#include "endscope/ends.hpp"
#include "endscope/qi.hpp"
#include "endscope/walk.hpp"
#include "endscope/window.hpp"

namespace endscope::report {

using Json = nlohmann::ordered_json;

inline const char* to_string(Certainty c) {
    switch (c) {
        case Certainty::Exact: return "Exact";
        case Certainty::LowerBound: return "LowerBound";
        case Certainty::UpperBound: return "UpperBound";
    }
    return "?";
}

inline Json json_of(const DiameterEstimate& d) {
    Json j;
    if (d.is_infinite)
        j["value"] = "Infinite";
    else
        j["value"] = d.value;
    j["certainty"] = to_string(d.certainty);
    return j;
}

inline Json json_of(const KindVerdict& k) {
    Json j;
    j["cert"] = endscope::to_string(k.cert);
    j["depth"] = k.depth;
    return j;
}

inline Json json_of(const Window& w) {
    Json j;
    j["origin"] = w.origin().token;
    j["radius"] = w.radius();
    j["vertices"] = w.vertex_count();
    j["edges"] = w.edge_count();
    j["frontier"] = w.frontier().size();
    j["fully_explored"] = w.fully_explored();
    return j;
}

inline Json json_of(const CutCandidate& cc) {
    Json j;
    j["carrier"] = cc.carrier.describe();
    j["theta_size"] = cc.boundaries.theta.size();
    j["inner_theta_size"] = cc.boundaries.inner_theta.size();
    j["delta_size"] = cc.boundaries.delta.size();
    j["delta_growing_with_budget"] = cc.boundaries.delta_growing;
    j["vertex"] = json_of(cc.vertex_kind);
    j["edge"] = json_of(cc.edge_kind);
    j["metric"] = json_of(cc.metric_kind);
    return j;
}

inline Json json_of(const StarReport& r) {
    Json j;
    j["center"] = r.center.token;
    j["radius"] = r.radius;
    j["score"] = r.score;
    j["open_components"] = r.open_component_count;
    j["closed_components"] = r.closed_component_count;
    switch (r.verdict) {
        case StarReport::Verdict::StarBallEvidence: j["verdict"] = "StarBallEvidence"; break;
        case StarReport::Verdict::RefutedAtDepth: j["verdict"] = "RefutedAtDepth"; break;
        case StarReport::Verdict::Unknown: j["verdict"] = "Unknown"; break;
    }
    j["depth"] = r.depth;
    return j;
}

inline Json json_of(const DiameterWitness& w) {
    Json j;
    switch (w.kind) {
        case DiameterWitness::Kind::MetricRayPrefix: {
            j["kind"] = "MetricRayPrefix";
            Json path = Json::array();
            for (const auto& v : w.path) path.push_back(v.token);
            j["path"] = std::move(path);
            break;
        }
        case DiameterWitness::Kind::StarBallWitness:
            j["kind"] = "StarBallWitness";
            j["star"] = json_of(*w.star);
            break;
        case DiameterWitness::Kind::BoundedCertified:
            j["kind"] = "BoundedCertified";
            j["diameter"] = w.bounded_diameter;
            break;
        case DiameterWitness::Kind::Unknown: j["kind"] = "Unknown"; break;
    }
    j["depth"] = w.depth;
    return j;
}

inline Json json_of(const Verdict& v) {
    Json j;
    j["notion"] = endscope::to_string(v.notion);
    j["outcome"] = endscope::to_string(v.outcome);
    j["depth"] = v.depth;
    if (v.certificate) j["certificate"] = json_of(*v.certificate);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline Json json_of(const EndCount& c) {
    Json j;
    j["notion"] = endscope::to_string(c.notion);
    j["lower_bound"] = c.lower_bound;
    j["status"] = endscope::to_string(c.status);
    j["depth"] = c.depth;
    return j;
}

inline Json json_of(const SequenceClassification& s) {
    Json j;
    j["case"] = endscope::to_string(s.kind);
    j["depth"] = s.depth;
    j["evidence"] = s.evidence;
    if (s.kind == SequenceClassification::Case::VertexLimit)
        j["limit_vertex"] = s.limit_vertex.token;
    if (s.approximant) {
        Json chain = Json::array();
        for (const auto& link : s.approximant->chain) {
            Json l;
            l["radius"] = link.radius;
            l["fingerprint"] = link.fingerprint;
            l["open"] = link.open;
            chain.push_back(std::move(l));
        }
        j["chain"] = std::move(chain);
    }
    return j;
}

inline Json json_of(const EndApproximant& a) {
    Json j;
    Json chain = Json::array();
    for (const auto& link : a.chain) {
        Json l;
        l["radius"] = link.radius;
        l["fingerprint"] = link.fingerprint;
        l["open"] = link.open;
        chain.push_back(std::move(l));
    }
    j["chain"] = std::move(chain);
    Json path = Json::array();
    for (const auto& v : a.witness_path) path.push_back(v.token);
    j["witness_path"] = std::move(path);
    j["depth"] = a.depth;
    return j;
}

inline Json json_of(const QIReport& r) {
    Json j;
    j["checked_pairs"] = r.checked_pairs;
    j["skipped"] = r.skipped;
    j["verdict"] = r.no_violation_found() ? "NoViolationFound" : "Violated";
    Json vs = Json::array();
    for (const auto& v : r.violations) {
        Json e;
        e["axiom"] = v.axiom;
        e["witness"] = Json::array({v.w1.token, v.w2.token});
        e["measured"] = v.measured;
        e["bound"] = v.bound;
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    return j;
}

inline Json json_of(const QuasiOpenEvidence& e) {
    Json j;
    j["verdict"] =
        e.verdict == QuasiOpenEvidence::Verdict::OpenEvidence ? "OpenEvidence" : "Unknown";
    j["theta_size"] = e.theta_size;
    j["theta_diameter"] = json_of(e.theta_diameter);
    j["containment_checked"] = e.containment_checked;
    j["containment_violations"] = e.containment_violations;
    j["containment_bound"] = e.containment_bound;
    if (!e.hint.empty()) j["hint"] = e.hint;
    return j;
}

inline Json json_of(const ConvergenceReport& r) {
    Json j;
    j["trajectories"] = r.trajectories;
    j["steps"] = r.steps;
    j["prefix_depth"] = r.prefix_depth;
    j["stabilized_fraction"] = r.stabilized_fraction;
    j["escape_fraction"] = r.escape_fraction;
    j["mean_length_ratio"] = r.mean_length_ratio;
    Json letters = Json::object();
    for (const auto& [token, count] : r.first_letter_counts) letters[token] = count;
    j["first_letter_counts"] = std::move(letters);
    j["outside_theorem_hypothesis"] = r.outside_theorem_hypothesis;
    return j;
}

// Top-level envelope shared by all CLI reports.
inline Json envelope(const std::string& command) {
    Json j;
    j["schema"] = "endscope/1";
    j["command"] = command;
    return j;
}

} // namespace endscope::report

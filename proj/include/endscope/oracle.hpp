// oracle.hpp — interface for gallery-graph ground-truth certifiers.
//
// A window can certify cut kinds only from its finite explored evidence;
// global negative claims and tail membership of rays in open-ended sets
// are undecidable from a window alone. Gallery graphs know their structure
// in closed form and implement this interface; every answer must be pure,
// deterministic and consistent with the documented ground truth.
#pragma once

#include <optional>
#include <vector>

#include "endscope/carrier.hpp"
#include "endscope/rays.hpp"

namespace endscope {

class Window;

enum class Cert { YesCertified, NoCertified, Unknown };

inline const char* to_string(Cert c) {
    switch (c) {
        case Cert::YesCertified: return "YesCertified";
        case Cert::NoCertified: return "NoCertified";
        case Cert::Unknown: return "UnknownAtDepth";
    }
    return "?";
}

struct CutTruth {
    Cert vertex = Cert::Unknown;
    Cert edge = Cert::Unknown;
    Cert metric = Cert::Unknown;
};

class GalleryOracle {
  public:
    virtual ~GalleryOracle() = default;

    // Exact membership of a vertex in a shape carrier; nullopt if the shape
    // is not one of this graph's documented shapes.
    virtual std::optional<bool> shape_contains(const Carrier&, const VertexId&) const {
        return std::nullopt;
    }

    // Global cut-kind truth for a carrier this oracle understands.
    virtual std::optional<CutTruth> certify(const Carrier&) const { return std::nullopt; }

    // Whether window components of K(center, radius)* coincide with true
    // components (so labels, tails and separations drawn from them are
    // globally valid, not just window-valid).
    virtual bool ball_components_stable(const VertexId&, int) const { return false; }

    // Tail membership of a *named* ray: true = all but finitely many ray
    // vertices lie in the carrier, false = all but finitely many lie in its
    // complement, nullopt = unknown or oscillating.
    virtual std::optional<bool> ray_eventually_in(const Ray&, const Carrier&) const {
        return std::nullopt;
    }

    // Certified equivalence of two named rays under a notion (true only).
    virtual std::optional<bool> equivalent(const Ray&, const Ray&, Notion) const {
        return std::nullopt;
    }

    // Shape carriers worth trying as separating cuts at this depth.
    virtual std::vector<Carrier> candidate_cuts(Notion, int) const { return {}; }

    // Complement of a shape carrier, when it is again a documented shape.
    virtual std::optional<Carrier> complement_shape(const Carrier&) const { return std::nullopt; }

    // Recognize a window vertex set (e.g. a min-cut side) as a known shape.
    virtual std::optional<Carrier> match_shape(const Window&, const std::vector<VertexId>&) const {
        return std::nullopt;
    }

    // Structural facts used by end counting.
    virtual bool rays_exist() const { return true; }
    virtual bool metric_rays_exist() const { return true; }
};

} // namespace endscope

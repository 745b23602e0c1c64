// carrier.hpp — descriptions of vertex sets that cut operations act on.
//
// A carrier names a set e of vertices, possibly infinite, in one of four
// ways. Explicit and complement-of-finite sets are self-contained; ball
// complement components are named by (center, radius, component
// fingerprint); gallery shapes are symbolic and interpreted by the owning
// graph's oracle (membership is then exact and depth-stable).
#pragma once

#include <string>
#include <vector>

#include "endscope/vertex.hpp"

namespace endscope {

struct Carrier {
    enum class Kind { ExplicitFinite, ComplementOfFinite, BallComplementComponent, Shape };

    Kind kind = Kind::ExplicitFinite;
    std::vector<VertexId> set;   // ExplicitFinite / ComplementOfFinite
    VertexId center;             // BallComplementComponent
    int radius = 0;              // BallComplementComponent
    std::string fingerprint;     // BallComplementComponent
    std::string shape;           // Shape id, documented per gallery graph
    long long param = 0;         // Shape integer parameter
    std::string sparam;          // Shape string parameter (addresses, words)

    static Carrier explicit_finite(std::vector<VertexId> s) {
        Carrier c;
        c.kind = Kind::ExplicitFinite;
        c.set = std::move(s);
        return c;
    }
    static Carrier complement_of_finite(std::vector<VertexId> s) {
        Carrier c;
        c.kind = Kind::ComplementOfFinite;
        c.set = std::move(s);
        return c;
    }
    static Carrier ball_component(VertexId center, int radius, std::string fingerprint) {
        Carrier c;
        c.kind = Kind::BallComplementComponent;
        c.center = std::move(center);
        c.radius = radius;
        c.fingerprint = std::move(fingerprint);
        return c;
    }
    static Carrier gallery_shape(std::string shape, long long param = 0, std::string sparam = {}) {
        Carrier c;
        c.kind = Kind::Shape;
        c.shape = std::move(shape);
        c.param = param;
        c.sparam = std::move(sparam);
        return c;
    }

    std::string describe() const {
        switch (kind) {
            case Kind::ExplicitFinite:
                return "explicit[" + std::to_string(set.size()) + "]";
            case Kind::ComplementOfFinite:
                return "complement-of[" + std::to_string(set.size()) + "]";
            case Kind::BallComplementComponent:
                return "ball-component(" + center.token + "," + std::to_string(radius) + "," +
                       fingerprint + ")";
            case Kind::Shape:
                return "shape:" + shape + "(" + std::to_string(param) +
                       (sparam.empty() ? "" : "," + sparam) + ")";
        }
        return "?";
    }
};

} // namespace endscope

// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace endscope {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Rejected configuration: bad parameters, zero budget, unnormalized measure.
struct InvalidConfigError : Error {
    explicit InvalidConfigError(const std::string& what) : Error(what) {}
};

// A vertex (or carrier) was referenced that the window has not explored.
struct NotExploredError : Error {
    explicit NotExploredError(const std::string& what) : Error(what) {}
};

// Ray verification failed: non-adjacent consecutive vertices or a repeat.
struct InvalidRayError : Error {
    explicit InvalidRayError(const std::string& what) : Error(what) {}
};

// A metric-end operation was asked of a ray without metric-ray evidence.
struct NotMetricRayError : Error {
    explicit NotMetricRayError(const std::string& what) : Error(what) {}
};

// The input does not escape; caller should use classify_sequence instead.
struct ClassificationRedirect : Error {
    explicit ClassificationRedirect(const std::string& what) : Error(what) {}
};

// Classification found evidence for more than one case (or none) at depth.
struct ConflictingEvidenceError : Error {
    explicit ConflictingEvidenceError(const std::string& what) : Error(what) {}
};

} // namespace endscope

#ifndef HOPFCYCLIC_ERRORS_HPP
#define HOPFCYCLIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfcyclic {

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct CompositionError : std::runtime_error {
    explicit CompositionError(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigurationError : std::runtime_error {
    explicit ConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Carries the text of a validation report whose failures block a pipeline.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& report) : std::runtime_error(report) {}
};

// Carries the text of a relation-certification report with the failing identity.
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& report) : std::runtime_error(report) {}
};

} // namespace hopfcyclic

#endif

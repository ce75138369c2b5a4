#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace disub {

// File-format errors; carries the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A lemma (or the finder) could not certify a required dichromatic-number
// threshold. `step` names the operation that failed.
struct CertificationFailure : std::runtime_error {
    std::string step;
    CertificationFailure(std::string step_, const std::string &msg)
        : std::runtime_error(step_ + ": " + msg), step(std::move(step_)) {}
};

// Instance exceeds the configured exact-engine vertex limit.
struct EngineLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace disub

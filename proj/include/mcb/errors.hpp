#ifndef MCB_ERRORS_HPP
#define MCB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcb {

struct McbError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / parameter errors (CLI exit code 1).
struct ParseError : McbError {
    ParseError(int line, const std::string& what)
        : McbError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct InvalidParam : McbError {
    using McbError::McbError;
};

// Structural rejection (CLI exit code 2).
struct NotPartial2Tree : McbError {
    using McbError::McbError;
};

// Contract violations and internal invariant failures (CLI exit code 3).
struct NotBiconnected : McbError {
    using McbError::McbError;
};
struct TooSmall : McbError {
    using McbError::McbError;
};
struct OracleBuildError : McbError {
    using McbError::McbError;
};
struct VertexInBag : McbError {
    using McbError::McbError;
};
struct PairNotInBag : McbError {
    using McbError::McbError;
};
struct NotOuterplanar : McbError {
    using McbError::McbError;
};
struct ExpansionNotSimple : McbError {
    using McbError::McbError;
};
struct InternalError : McbError {
    using McbError::McbError;
};

// Reference-oracle guard: instance too large for exhaustive enumeration.
struct TooLarge : McbError {
    using McbError::McbError;
};

}  // namespace mcb

#endif

#ifndef FOURPATH_ERRORS_HPP
#define FOURPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fourpath {

// Base for all library-specific failures. Argument misuse (bad vertex ids,
// self-loops, empty-graph connectivity) throws std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable size cap was exceeded. The message names the cap to raise.
struct CapError : Error {
    using Error::Error;
};

// Input graph is outside the graph class an operation requires.
struct ClassError : Error {
    using Error::Error;
};

// A stated precondition failed; `clause` identifies which one.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& clause_text)
        : Error("precondition failed: " + clause_text), clause(clause_text) {}
    std::string clause;
};

// A statement that is proved for the whole class failed on a concrete input.
// Never swallowed: callers surface these as first-class findings.
struct TheoremViolation : Error {
    using Error::Error;
};

}  // namespace fourpath

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace locdim {

/* All domain errors derive from Error so callers can catch one type.
 * ParseError carries a line number when the input came from a file. */

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct CycleError : Error {
    using Error::Error;
};

struct IdRangeError : Error {
    using Error::Error;
};

struct ParamError : Error {
    using Error::Error;
};

struct SizeError : Error {
    using Error::Error;
};

struct HeightError : Error {
    using Error::Error;
};

struct ChainError : Error {
    using Error::Error;
};

struct NotPleError : Error {
    using Error::Error;
};

struct PartitionError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

// An algorithm hit a cycle that theory says cannot exist: a bug, not bad input.
struct InternalCycleError : Error {
    using Error::Error;
};

struct NodeLimitError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
};

} // namespace locdim

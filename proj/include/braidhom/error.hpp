#pragma once
#include <stdexcept>
#include <string>

namespace braidhom {

// All failures carry a stable kind tag (tested) plus free-form context.
// Kinds in use: DivisionByZero, PoleAtPoint, ParseError, IllegalExponent,
// MapUndefined, OutsideWindow, WindowOverflow, NotAComplex, UnknownExample,
// AxiomViolation, ConfigError, NotInvertible, NotInOracle, ArityMismatch,
// IndexOutOfRange, NoResolution, NotSplit.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, const std::string& kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace braidhom

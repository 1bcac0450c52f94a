#pragma once

#include <stdexcept>
#include <string>

namespace sturmlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactreal
struct MixedRadicands : Error {
    MixedRadicands() : Error("operands lie in different quadratic fields") {}
};
struct SyntaxError : Error {
    explicit SyntaxError(const std::string& what) : Error("parse error: " + what) {}
};
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

// words
struct LengthOutOfRange : Error {
    explicit LengthOutOfRange(const std::string& what) : Error(what) {}
};
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

// sturmian
struct RationalSlope : Error {
    RationalSlope() : Error("operation requires an irrational slope") {}
};
struct NotAFactorWeight : Error {
    explicit NotAFactorWeight(const std::string& what) : Error(what) {}
};
struct InvalidQuotient : Error {
    explicit InvalidQuotient(const std::string& what) : Error(what) {}
};
struct TooShort : Error {
    explicit TooShort(const std::string& what) : Error(what) {}
};
struct ParseFailure : Error {
    explicit ParseFailure(const std::string& what) : Error(what) {}
};

// permutations
struct DuplicateValue : Error {
    explicit DuplicateValue(const std::string& what) : Error(what) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

// constructions
struct NotStrictlyIncreasing : Error {
    NotStrictlyIncreasing() : Error("index sequence must be strictly increasing and positive") {}
};
struct CycleDetected : Error {
    CycleDetected() : Error("constraint set is not a strict partial order") {}
};

// analysis
struct OutOfUnitInterval : Error {
    explicit OutOfUnitInterval(const std::string& what) : Error(what) {}
};

// cli
struct EmptyInput : Error {
    EmptyInput() : Error("empty input") {}
};

}  // namespace sturmlab

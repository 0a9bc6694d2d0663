#pragma once

#include <stdexcept>
#include <string>

namespace t0enum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingParameter : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    BudgetExceeded(std::string dim, long long v, long long lim)
        : Error("budget exceeded: " + dim + " = " + std::to_string(v) + " > " + std::to_string(lim)),
          dimension(std::move(dim)), value(v), limit(lim) {}
    std::string dimension;
    long long value;
    long long limit;
};

struct UnknownClass : Error {
    explicit UnknownClass(const std::string& id) : Error("unknown class: " + id), class_id(id) {}
    std::string class_id;
};

struct OracleOnlyClass : Error {
    explicit OracleOnlyClass(const std::string& id)
        : Error("oracle-only class; use oracle command (" + id + ")"), class_id(id) {}
    std::string class_id;
};

struct InsufficientDepth : Error {
    using Error::Error;
};

struct NotDivisible : Error {
    using Error::Error;
};

}  // namespace t0enum

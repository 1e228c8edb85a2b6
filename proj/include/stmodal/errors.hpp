#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stmodal {

class NotTransitive : public std::logic_error {
public:
    NotTransitive() : std::logic_error("frame is not transitive") {}
};

class PreconditionFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required_log2, std::uint64_t cap)
        : std::runtime_error("valuation budget exceeded: need 2^" + std::to_string(required_log2) +
                             " valuations, cap is " + std::to_string(cap)),
          required_log2_(required_log2) {}

    /// Required valuation count is 2^required_log2().
    [[nodiscard]] std::uint64_t required_log2() const { return required_log2_; }

private:
    std::uint64_t required_log2_;
};

class UnsupportedAxiom : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A witness search ran out of iterations. The existence theorems say this cannot happen.
class WitnessSearchExhausted : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace stmodal

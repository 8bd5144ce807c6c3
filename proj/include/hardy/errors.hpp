#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hardy {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A computation ran out of its configured budget (terms, series length).
// Carries whatever partial result was available when it stopped.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what,
                           std::complex<double> partial = {},
                           double tail_estimate = 0.0)
        : std::runtime_error(what), partial_(partial), tail_(tail_estimate) {}

    std::complex<double> partial() const noexcept { return partial_; }
    double tail_estimate() const noexcept { return tail_; }

private:
    std::complex<double> partial_;
    double tail_;
};

}  // namespace hardy

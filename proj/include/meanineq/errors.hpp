#ifndef MEANINEQ_ERRORS_HPP
#define MEANINEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace meanineq {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid numeric input to a kernel/mean (non-finite or non-positive).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed text input (kernel names, polynomial grammar, certificate JSON).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

namespace algebra {

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

// Exact division failed; carries a human-readable description of the first
// offending remainder coefficient.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

// square_compare did not eliminate any radical signature.
struct NoProgressError : Error {
    explicit NoProgressError(const std::string& what) : Error(what) {}
};

// expand_combination rejections.
struct UnsupportedKernelError : Error {
    explicit UnsupportedKernelError(const std::string& what) : Error(what) {}
};
struct UnsupportedParamError : Error {
    explicit UnsupportedParamError(const std::string& what) : Error(what) {}
};

// Sturm counting over an interval whose endpoint is a root of the polynomial.
struct EndpointRootError : Error {
    explicit EndpointRootError(const std::string& what) : Error(what) {}
};

} // namespace algebra

namespace distributions {

struct NonPositiveEntryError : Error {
    explicit NonPositiveEntryError(const std::string& what) : Error(what) {}
};
struct SumNotOneError : Error {
    explicit SumNotOneError(const std::string& what) : Error(what) {}
};
struct TooShortError : Error {
    explicit TooShortError(const std::string& what) : Error(what) {}
};
struct LengthMismatchError : Error {
    explicit LengthMismatchError(const std::string& what) : Error(what) {}
};

} // namespace distributions

} // namespace meanineq

#endif

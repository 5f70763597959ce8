#ifndef MEANINEQ_STURM_HPP
#define MEANINEQ_STURM_HPP

#include "meanineq/polynomial.hpp"

#include <optional>
#include <vector>

namespace meanineq::algebra {

// Open interval with rational or infinite endpoints (nullopt = +/- infinity).
struct Interval {
    std::optional<Rat> lo; // nullopt: -infinity
    std::optional<Rat> hi; // nullopt: +infinity

    static Interval positive_axis() { return {Rat(0), std::nullopt}; }
    static Interval negative_axis() { return {std::nullopt, Rat(0)}; }
};

struct SturmReport {
    Poly polynomial;
    Interval interval;
    int root_count = 0; // distinct real roots in the open interval
};

// Distinct-real-root count via sign variations of the Sturm chain of the
// squarefree part. Finite endpoints must not be roots (deflate first);
// throws EndpointRootError otherwise, ZeroPolynomialError for p == 0.
SturmReport sturm_count(const Poly& p, const Interval& interval);

// Sturm-guided bisection: isolating intervals for every distinct real root
// in `interval`, each refined to width <= `width`. Endpoint preconditions as
// for sturm_count. Returned intervals are sorted and each contains exactly
// one root.
std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p, const Interval& interval, const Rat& width);

} // namespace meanineq::algebra

#endif

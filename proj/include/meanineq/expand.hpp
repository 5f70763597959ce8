#ifndef MEANINEQ_EXPAND_HPP
#define MEANINEQ_EXPAND_HPP

#include "meanineq/kernels.hpp"
#include "meanineq/radical.hpp"

namespace meanineq::algebra {

struct Expansion {
    RadicalExpr numerator;
    Poly denominator; // nonnegative coefficients, positive leading coefficient
};

// Exact ratio profile of a mean-only combination in t = sqrt(x):
// numerator/denominator equals sum_i c_i f_i(t^2) for all t > 0, over the
// least common denominator of the per-mean profiles. Throws
// UnsupportedKernelError for divergence kernels and UnsupportedParamError
// for parametric kinds outside the named set.
Expansion expand_combination(const kernels::Combination& combo);

// The exact profile of one named mean: f(t^2) = numerator/denominator.
void named_profile(kernels::NamedMean m, RadicalExpr& numerator, Poly& denominator);

} // namespace meanineq::algebra

#endif

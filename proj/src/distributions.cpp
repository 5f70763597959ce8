#include "meanineq/distributions.hpp"

#include "meanineq/errors.hpp"

#include <cmath>

namespace meanineq::distributions {

using kernels::DivKernel;
using kernels::KernelKind;
using kernels::PositivePair;

Distribution Distribution::validate(std::vector<double> probs) {
    if (probs.size() < 2) {
        throw TooShortError("distribution needs at least 2 entries, got " + std::to_string(probs.size()));
    }
    for (size_t i = 0; i < probs.size(); ++i) {
        if (!(probs[i] > 0.0) || !std::isfinite(probs[i])) {
            throw NonPositiveEntryError("entry " + std::to_string(i) + " = " + std::to_string(probs[i]) +
                                        " is not a positive finite real");
        }
    }
    double sum = 0.0, comp = 0.0;
    for (double p : probs) {
        const double t = sum + p;
        comp += (std::fabs(sum) >= std::fabs(p)) ? (sum - t) + p : (p - t) + sum;
        sum = t;
    }
    sum += comp;
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw SumNotOneError("entries sum to " + std::to_string(sum) + ", off by " + std::to_string(sum - 1.0));
    }
    return Distribution(std::move(probs));
}

namespace {

void check_lengths(const Distribution& P, const Distribution& Q) {
    if (P.size() != Q.size()) {
        throw LengthMismatchError("distribution lengths differ: " + std::to_string(P.size()) + " vs " +
                                  std::to_string(Q.size()));
    }
}

template <typename F> double accumulate(const Distribution& P, const Distribution& Q, F&& term) {
    double sum = 0.0, comp = 0.0;
    for (size_t i = 0; i < P.size(); ++i) {
        const double v = term(P.probs()[i], Q.probs()[i]);
        const double t = sum + v;
        comp += (std::fabs(sum) >= std::fabs(v)) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace

double divergence(const KernelKind& kind, const Distribution& P, const Distribution& Q) {
    check_lengths(P, Q);
    return accumulate(P, Q, [&](double p, double q) { return kernels::eval_kernel(kind, PositivePair{p, q}); });
}

double divergence(const kernels::Combination& combo, const Distribution& P, const Distribution& Q) {
    check_lengths(P, Q);
    return accumulate(P, Q,
                      [&](double p, double q) { return kernels::eval_combination(combo, PositivePair{p, q}); });
}

double check_identity_17(const Distribution& P, const Distribution& Q) {
    check_lengths(P, Q);
    // Per-coordinate residual j - 4(i + t) vanishes identically in exact
    // arithmetic; summing the residual keeps cancellation local.
    return accumulate(P, Q, [](double p, double q) {
        const PositivePair pq{p, q};
        const double i = kernels::eval_kernel(DivKernel::I, pq);
        const double j = kernels::eval_kernel(DivKernel::J, pq);
        const double t = kernels::eval_kernel(DivKernel::T, pq);
        return j - 4.0 * (i + t);
    });
}

} // namespace meanineq::distributions

#ifndef MEANINEQ_DISTRIBUTIONS_HPP
#define MEANINEQ_DISTRIBUTIONS_HPP

#include "meanineq/kernels.hpp"

#include <vector>

namespace meanineq::distributions {

// Point of the open probability simplex: strictly positive entries summing
// to 1 within 1e-12, length >= 2.
class Distribution {
public:
    // Throws NonPositiveEntryError / SumNotOneError / TooShortError.
    static Distribution validate(std::vector<double> probs);

    const std::vector<double>& probs() const { return probs_; }
    size_t size() const { return probs_.size(); }

private:
    explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}
    std::vector<double> probs_;
};

// Sum of kernel(p_i, q_i) with compensated accumulation. Throws
// LengthMismatchError when |P| != |Q|.
double divergence(const kernels::KernelKind& kind, const Distribution& P, const Distribution& Q);
double divergence(const kernels::Combination& combo, const Distribution& P, const Distribution& Q);

// Residual J - 4(I + T); zero in exact arithmetic for every P, Q.
double check_identity_17(const Distribution& P, const Distribution& Q);

} // namespace meanineq::distributions

#endif

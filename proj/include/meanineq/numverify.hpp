#ifndef MEANINEQ_NUMVERIFY_HPP
#define MEANINEQ_NUMVERIFY_HPP

#include "meanineq/registry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace meanineq::numverify {

struct VerifyConfig {
    int grid_points = 4096;
    double x_max = 1e12;
    int refine_iters = 80;
    double tol_rel = 1e-10;
    int distribution_samples = 1000;
    uint64_t seed = 20121938; // recorded in every report

    // Throws Error unless grid_points >= 16, x_max > 1, tol_rel > 0.
    void check() const;
};

struct VerifyReport {
    std::string statement_id;
    bool pass = false;
    // Minimum value seen over all probes; for identities, the largest
    // |value| is reported negated so pass/fail reads the same way.
    double min_value = 0.0;
    double argmin_x = 1.0; // 0 for distribution-level statements
    long samples_used = 0;
    uint64_t seed = 0;
};

// Global minimum of the ratio profile g(x) over (0, infinity): log-uniform
// grid on [1, x_max], the (0,1) side covered through g(1/x) = g(x)/x,
// golden-section refinement around the three smallest probes.
std::pair<double, double> min_gap(const registry::Statement& stmt, const VerifyConfig& cfg);

VerifyReport verify(const registry::Statement& stmt, const VerifyConfig& cfg);

// One report per registry statement, in id order. Deterministic for a fixed
// config; `jobs` > 1 verifies statements concurrently (reports are merged in
// id order, per-statement RNG streams make the output independent of the
// schedule).
std::vector<VerifyReport> verify_all(const VerifyConfig& cfg, int jobs = 1);

// Deterministic sample streams for distribution-level checks (exposed for
// tests). Generates n entries of a Dirichlet(1) vector.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : state_(seed) {}
    uint64_t next_u64();
    double next_unit(); // uniform in (0, 1)
    std::vector<double> next_distribution(int n);

private:
    uint64_t state_;
};

} // namespace meanineq::numverify

#endif

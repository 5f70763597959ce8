#include "meanineq/numverify.hpp"

#include "meanineq/distributions.hpp"
#include "meanineq/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace meanineq::numverify {

using distributions::Distribution;
using kernels::PositivePair;
using registry::ClaimKind;
using registry::Level;
using registry::Statement;

void VerifyConfig::check() const {
    if (grid_points < 16) throw Error("grid_points must be >= 16");
    if (!(x_max > 1.0)) throw Error("x_max must be > 1");
    if (!(tol_rel > 0.0)) throw Error("tol_rel must be > 0");
}

uint64_t SampleRng::next_u64() {
    // splitmix64; fixed algorithm so reports are identical across platforms.
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SampleRng::next_unit() {
    for (;;) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        if (u > 0.0 && u < 1.0) return u;
    }
}

std::vector<double> SampleRng::next_distribution(int n) {
    // Dirichlet(1,...,1) via normalized exponentials.
    std::vector<double> e(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        e[i] = -std::log(next_unit());
        sum += e[i];
    }
    for (double& x : e) x /= sum;
    return e;
}

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Probe {
    double value = 0.0;
    double x = 1.0;
};

// Value of the gap at e^u on the direct branch, or at e^-u through the
// inversion identity g(1/x) = g(x)/x on the mirrored branch.
struct BranchEval {
    const kernels::Combination* combo;
    bool inverted;

    Probe operator()(double u) const {
        const double x = std::exp(u);
        const double g = kernels::eval_combination(*combo, PositivePair{x, 1.0});
        if (!inverted) return {g, x};
        return {g / x, 1.0 / x};
    }
};

void golden_refine(const BranchEval& f, double lo, double hi, int iters, Probe& best) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    Probe fc = f(c), fd = f(d);
    if (fc.value < best.value) best = fc;
    if (fd.value < best.value) best = fd;
    for (int i = 0; i < iters && (b - a) > 1e-12 * (1.0 + std::fabs(a) + std::fabs(b)); ++i) {
        if (fc.value < fd.value) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            if (fc.value < best.value) best = fc;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            if (fd.value < best.value) best = fd;
        }
    }
}

std::pair<Probe, long> min_gap_probe(const Statement& stmt, const VerifyConfig& cfg) {
    const double u_max = std::log(cfg.x_max);
    const int n = cfg.grid_points;
    Probe best{std::numeric_limits<double>::infinity(), 1.0};
    long evals = 0;

    for (bool inverted : {false, true}) {
        BranchEval f{&stmt.combo, inverted};
        std::vector<Probe> grid(n);
        std::vector<double> us(n);
        for (int i = 0; i < n; ++i) {
            us[i] = u_max * static_cast<double>(i) / (n - 1);
            grid[i] = f(us[i]);
            ++evals;
            if (grid[i].value < best.value) best = grid[i];
        }
        // Refine around the three smallest probes.
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        std::partial_sort(idx.begin(), idx.begin() + std::min(3, n), idx.end(),
                          [&](int a, int b) { return grid[a].value < grid[b].value; });
        for (int k = 0; k < std::min(3, n); ++k) {
            const int i = idx[k];
            const double lo = us[std::max(0, i - 1)];
            const double hi = us[std::min(n - 1, i + 1)];
            golden_refine(f, lo, hi, cfg.refine_iters, best);
            evals += 2 * cfg.refine_iters;
        }
    }
    return {best, evals};
}

VerifyReport verify_kernel_level(const Statement& stmt, const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.statement_id = stmt.id;
    rep.seed = cfg.seed;
    if (stmt.kind == ClaimKind::Nonneg) {
        auto [best, evals] = min_gap_probe(stmt, cfg);
        rep.min_value = best.value;
        rep.argmin_x = best.x;
        rep.samples_used = evals;
        rep.pass = best.value >= -cfg.tol_rel * (1.0 + best.x);
    } else {
        // Identity at kernel level: largest |g| over the grid must vanish.
        const double u_max = std::log(cfg.x_max);
        double worst = 0.0, worst_x = 1.0;
        for (int i = 0; i < cfg.grid_points; ++i) {
            const double x = std::exp(u_max * static_cast<double>(i) / (cfg.grid_points - 1));
            for (double probe : {x, 1.0 / x}) {
                const double g = kernels::eval_combination(stmt.combo, PositivePair{probe, 1.0});
                if (std::fabs(g) > std::fabs(worst)) {
                    worst = g;
                    worst_x = probe;
                }
            }
        }
        rep.min_value = -std::fabs(worst);
        rep.argmin_x = worst_x;
        rep.samples_used = 2L * cfg.grid_points;
        rep.pass = std::fabs(worst) <= cfg.tol_rel * (1.0 + worst_x);
    }
    return rep;
}

VerifyReport verify_distribution_level(const Statement& stmt, const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.statement_id = stmt.id;
    rep.seed = cfg.seed;
    rep.argmin_x = 0.0;
    SampleRng rng(cfg.seed ^ fnv1a(stmt.id));
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < cfg.distribution_samples; ++k) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 9);
        const Distribution P = Distribution::validate(rng.next_distribution(n));
        const Distribution Q = Distribution::validate(rng.next_distribution(n));
        const double v = distributions::divergence(stmt.combo, P, Q);
        if (stmt.kind == ClaimKind::Nonneg) {
            worst = std::min(worst, v);
        } else {
            // Tolerance relative to the positive side of the combination,
            // |residual| <= tol * (1 + sum of positive terms).
            double pos = 0.0;
            for (const auto& [coeff, kind] : stmt.combo.terms) {
                if (coeff > 0) {
                    pos += algebra::rat_to_double(coeff) * distributions::divergence(kind, P, Q);
                }
            }
            const double scaled = std::fabs(v) / (1.0 + pos);
            if (-scaled < worst) worst = -scaled;
        }
    }
    rep.samples_used = cfg.distribution_samples;
    rep.min_value = worst;
    rep.pass = worst >= -cfg.tol_rel;
    return rep;
}

} // namespace

std::pair<double, double> min_gap(const Statement& stmt, const VerifyConfig& cfg) {
    cfg.check();
    auto [best, evals] = min_gap_probe(stmt, cfg);
    (void)evals;
    return {best.value, best.x};
}

VerifyReport verify(const Statement& stmt, const VerifyConfig& cfg) {
    cfg.check();
    return stmt.level == Level::Kernel ? verify_kernel_level(stmt, cfg) : verify_distribution_level(stmt, cfg);
}

std::vector<VerifyReport> verify_all(const VerifyConfig& cfg, int jobs) {
    cfg.check();
    const auto& statements = registry::all_statements();
    std::vector<VerifyReport> reports(statements.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < statements.size(); ++i) reports[i] = verify(statements[i], cfg);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= statements.size()) return;
            reports[i] = verify(statements[i], cfg);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

} // namespace meanineq::numverify

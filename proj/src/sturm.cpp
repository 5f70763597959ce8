#include "meanineq/sturm.hpp"

#include "meanineq/errors.hpp"

#include <algorithm>

namespace meanineq::algebra {

namespace {

std::vector<Poly> sturm_chain(const Poly& squarefree) {
    std::vector<Poly> chain;
    chain.push_back(squarefree);
    Poly d = squarefree.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    for (;;) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain[chain.size() - 1];
        Poly r = divide(a, b).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

int sign_at(const Poly& p, const std::optional<Rat>& point, bool at_minus_infinity) {
    if (p.is_zero()) return 0;
    if (!point) {
        int lead = sign(p.leading());
        if (at_minus_infinity && p.degree() % 2 == 1) return -lead;
        return lead;
    }
    return sign(p.eval(*point));
}

int variations(const std::vector<Poly>& chain, const std::optional<Rat>& point, bool at_minus_infinity) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, point, at_minus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

Poly squarefree_part(const Poly& p) {
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive_part();
    return divide(p, g).first.primitive_part();
}

// Roots of q in the half-open interval (lo, hi].
int count_half_open(const std::vector<Poly>& chain, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    return variations(chain, lo, !lo.has_value()) - variations(chain, hi, false);
}

} // namespace

SturmReport sturm_count(const Poly& p, const Interval& interval) {
    if (p.is_zero()) throw ZeroPolynomialError("sturm_count on zero polynomial");
    Poly q = squarefree_part(p);
    for (const auto& endpoint : {interval.lo, interval.hi}) {
        if (endpoint && q.eval(*endpoint) == 0) {
            throw EndpointRootError("interval endpoint " + rat_to_string(*endpoint) +
                                    " is a root; deflate it before counting");
        }
    }
    auto chain = sturm_chain(q);
    int n = count_half_open(chain, interval.lo, interval.hi);
    return SturmReport{p, interval, n};
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p, const Interval& interval, const Rat& width) {
    if (p.is_zero()) throw ZeroPolynomialError("isolate_roots on zero polynomial");
    Poly q = squarefree_part(p);
    for (const auto& endpoint : {interval.lo, interval.hi}) {
        if (endpoint && q.eval(*endpoint) == 0) {
            throw EndpointRootError("interval endpoint " + rat_to_string(*endpoint) +
                                    " is a root; deflate it before isolating");
        }
    }
    auto chain = sturm_chain(q);

    // Cauchy bound caps the infinite endpoints.
    Rat bound(1);
    for (int i = 0; i < q.degree(); ++i) {
        Rat m = rat_abs(q.coeff(i) / q.leading());
        if (m > bound) bound = m;
    }
    bound += 1;
    Rat lo = interval.lo ? *interval.lo : -bound;
    Rat hi = interval.hi ? *interval.hi : bound;
    if (!interval.lo && lo > hi) lo = hi - 1;
    if (!interval.hi && hi < lo) hi = lo + 1;

    std::vector<std::pair<Rat, Rat>> found;
    // (lo, hi] segments; a root exactly at the original open-interval border
    // was excluded above, and the bound endpoints are beyond every root.
    struct Seg {
        Rat lo, hi;
        int roots;
    };
    std::vector<Seg> work;
    int total = count_half_open(chain, lo, hi);
    if (total > 0) work.push_back({lo, hi, total});
    while (!work.empty()) {
        Seg seg = work.back();
        work.pop_back();
        if (seg.roots == 1 && seg.hi - seg.lo <= width) {
            found.emplace_back(seg.lo, seg.hi);
            continue;
        }
        Rat mid = (seg.lo + seg.hi) / 2;
        // Nudge off a root so each piece keeps clean counts.
        while (q.eval(mid) == 0) mid = (seg.lo + mid) / 2;
        int left = count_half_open(chain, seg.lo, mid);
        int right = seg.roots - left;
        if (left > 0) work.push_back({seg.lo, mid, left});
        if (right > 0) work.push_back({mid, seg.hi, right});
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace meanineq::algebra

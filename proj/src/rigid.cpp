#include "paraline/rigid.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace paraline {

PiecewiseRigidMap::PiecewiseRigidMap(IntegerPermutation p) : perm_(std::move(p)) {}

PiecewiseRigidMap PiecewiseRigidMap::composite(std::vector<PiecewiseRigidMap> factors) {
    PiecewiseRigidMap out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto& f = factors[i];
        out.perm_ = i == 0 ? f.perm_ : compose(out.perm_, f.perm_);
        if (f.is_composite())
            out.factors_.insert(out.factors_.end(), f.factors_.begin(), f.factors_.end());
        else
            out.factors_.push_back(std::move(f));
    }
    return out;
}

Rational PiecewiseRigidMap::eval(const Rational& x) const {
    const auto n = floor_of(x);
    return Rational(perm_.apply(n)) + (x - Rational(n));
}

Rational PiecewiseRigidMap::eval_inverse(const Rational& y) const {
    const auto n = floor_of(y);
    return Rational(paraline::inverse(perm_).apply(n)) + (y - Rational(n));
}

Rational PiecewiseRigidMap::eval_formal(const Rational& x) const {
    if (!is_composite()) return eval(x);
    Rational y = x;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) y = it->eval_formal(y);
    return y;
}

PiecewiseRigidMap PiecewiseRigidMap::inverse() const {
    if (!is_composite()) return PiecewiseRigidMap(paraline::inverse(perm_));
    std::vector<PiecewiseRigidMap> inv;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) inv.push_back(it->inverse());
    return composite(std::move(inv));
}

Rational eval(const PiecewiseRigidMap& f, const Rational& x) { return f.eval(x); }
Rational eval_inverse(const PiecewiseRigidMap& f, const Rational& y) { return f.eval_inverse(y); }

PiecewiseRigidMap compose_maps(const PiecewiseRigidMap& f, const PiecewiseRigidMap& g) {
    return PiecewiseRigidMap::composite({f, g});
}

std::vector<Piece> pieces_in_window(const PiecewiseRigidMap& f, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("pieces_in_window: lo > hi");
    std::vector<Piece> out;
    out.reserve(std::size_t(hi - lo));
    for (auto n = lo; n < hi; ++n) out.push_back({n, f.permutation().apply(n) - n, 1});
    return out;
}

std::vector<std::int64_t> discontinuities_in_window(const PiecewiseRigidMap& f, std::int64_t lo,
                                                    std::int64_t hi) {
    std::vector<std::int64_t> out;
    const auto& p = f.permutation();
    for (auto n = lo + 1; n < hi; ++n)
        if (p.apply(n) != p.apply(n - 1) + 1) out.push_back(n);
    return out;
}

Rational random_rational(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
    const auto den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(lo * den, hi * den - 1);
    return Rational(num_dist(rng), den);
}

AuditReport rigidity_audit(const PiecewiseRigidMap& f, std::int64_t lo, std::int64_t hi,
                           std::size_t samples, std::uint64_t seed) {
    if (lo >= hi) throw std::invalid_argument("rigidity_audit: need lo < hi");
    if (samples < 2) throw std::invalid_argument("rigidity_audit: need at least 2 samples");
    AuditReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    auto fail = [&rep](bool& flag, std::string what) {
        flag = false;
        if (rep.witnesses.size() < 32) rep.witnesses.push_back(std::move(what));
    };

    // (1) bijection: distinct inputs give distinct outputs, and the inverse
    // recovers every input.
    std::map<Rational, Rational> preimage;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = random_rational(rng, lo, hi);
        const auto y = f.eval(x);
        if (f.eval_inverse(y) != x) fail(rep.bijective, "round trip fails at x=" + to_string(x));
        auto [it, fresh] = preimage.emplace(y, x);
        if (!fresh && it->second != x)
            fail(rep.bijective, "collision: " + to_string(x) + " and " + to_string(it->second));
    }
    std::set<std::int64_t> images;
    for (auto n = lo; n < hi; ++n)
        if (!images.insert(f.permutation().apply(n)).second)
            fail(rep.bijective, "interval images collide at n=" + std::to_string(n));

    // (2) |f'| = 1: difference quotient is exactly +1 inside every unit interval.
    std::uniform_int_distribution<std::int64_t> cell(lo, hi - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto n = cell(rng);
        const auto x1 = random_rational(rng, n, n + 1);
        const auto x2 = random_rational(rng, n, n + 1);
        if (f.eval(x2) - f.eval(x1) != x2 - x1)
            fail(rep.unit_slope, "slope != 1 between " + to_string(x1) + " and " + to_string(x2));
    }

    // (3) jumps only at integers, finitely many in the window. The definitional
    // set is cross-checked against evaluation just left of each integer.
    rep.discontinuities = discontinuities_in_window(f, lo, hi);
    const std::set<std::int64_t> jumps(rep.discontinuities.begin(), rep.discontinuities.end());
    const Rational eps(1, 1024);
    for (auto n = lo + 1; n < hi; ++n) {
        const bool continuous = f.eval(Rational(n) - eps) + eps == f.eval(Rational(n));
        if (continuous == (jumps.count(n) > 0))
            fail(rep.discrete_jumps, "jump classification disagrees at n=" + std::to_string(n));
    }
    if (rep.discontinuities.size() > std::size_t(hi - lo))
        fail(rep.discrete_jumps, "more jumps than integers in window");
    return rep;
}

}  // namespace paraline

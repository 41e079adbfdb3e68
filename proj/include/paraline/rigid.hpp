#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "paraline/permutation.hpp"
#include "paraline/rational.hpp"

namespace paraline {

/// Map of the line that moves unit intervals [n, n+1) rigidly:
/// f(x) = p(floor x) + frac x. A composite keeps the formal factors it was
/// built from (outermost first) and evaluates through the collapsed
/// permutation.
class PiecewiseRigidMap {
  public:
    /// Identity map.
    PiecewiseRigidMap() = default;
    explicit PiecewiseRigidMap(IntegerPermutation p);

    static PiecewiseRigidMap identity() { return {}; }
    /// Formal composite f_1 o f_2 o ... (applied right to left).
    static PiecewiseRigidMap composite(std::vector<PiecewiseRigidMap> factors);

    bool is_composite() const { return !factors_.empty(); }
    /// Outermost first; empty unless is_composite().
    const std::vector<PiecewiseRigidMap>& factors() const { return factors_; }
    const IntegerPermutation& permutation() const { return perm_; }

    Rational eval(const Rational& x) const;
    Rational eval_inverse(const Rational& y) const;
    /// Evaluates factor by factor instead of through the collapsed
    /// permutation; equals eval() for every x.
    Rational eval_formal(const Rational& x) const;

    PiecewiseRigidMap inverse() const;

  private:
    IntegerPermutation perm_;
    std::vector<PiecewiseRigidMap> factors_;
};

Rational eval(const PiecewiseRigidMap& f, const Rational& x);
Rational eval_inverse(const PiecewiseRigidMap& f, const Rational& y);

/// f o g; the result is a composite whose collapsed permutation is
/// compose(f.permutation(), g.permutation()).
PiecewiseRigidMap compose_maps(const PiecewiseRigidMap& f, const PiecewiseRigidMap& g);

/// [n, n+1) -> [n+offset, n+offset+1) with slope +1.
struct Piece {
    std::int64_t start = 0;
    std::int64_t offset = 0;
    int slope = 1;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// One piece for each n in [lo, hi).
std::vector<Piece> pieces_in_window(const PiecewiseRigidMap& f, std::int64_t lo, std::int64_t hi);

/// Integers n in (lo, hi) where the left limit p(n-1)+1 differs from the
/// value p(n).
std::vector<std::int64_t> discontinuities_in_window(const PiecewiseRigidMap& f, std::int64_t lo,
                                                    std::int64_t hi);

struct AuditReport {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::size_t samples = 0;
    bool bijective = true;
    bool unit_slope = true;
    bool discrete_jumps = true;
    std::vector<std::int64_t> discontinuities;
    std::vector<std::string> witnesses;  // one line per failure

    bool pass() const { return bijective && unit_slope && discrete_jumps; }
};

/// Checks the three defining conditions of a piecewise rigid map over the
/// real window [lo, hi): bijectivity on `samples` random rationals (with
/// round trips through the inverse), exact slope +1 between random pairs
/// sharing a unit interval, and that every jump sits on an integer.
AuditReport rigidity_audit(const PiecewiseRigidMap& f, std::int64_t lo, std::int64_t hi,
                           std::size_t samples, std::uint64_t seed = 1);

/// Uniform random rational in [lo, hi) with denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi,
                         std::int64_t max_den = 997);

}  // namespace paraline

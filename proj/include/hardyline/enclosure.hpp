#ifndef HARDYLINE_ENCLOSURE_HPP
#define HARDYLINE_ENCLOSURE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>

#include "hardyline/errors.hpp"

namespace hardyline {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest integer magnitude below which double addition of integers is exact.
inline constexpr double kExactIntLimit = 9007199254740992.0; // 2^53

inline double step_down(double x, int ulps = 2) {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -kInf);
    return x;
}

inline double step_up(double x, int ulps = 2) {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, kInf);
    return x;
}

// Certified interval [lo, hi] around a (possibly infinite) sum or supremum.
// hi == +inf encodes a certified-divergent or unknown-tail quantity.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;
    bool exact = false;

    static Enclosure point(double v) { return {v, v, true}; }

    static Enclosure bounds(double lo, double hi) {
        if (!(lo <= hi)) throw domain_error("Enclosure: lo > hi");
        return {lo, hi, lo == hi};
    }

    static Enclosure around(double mid, double halfwidth) {
        return {mid - halfwidth, mid + halfwidth, halfwidth == 0.0};
    }

    static Enclosure divergent() { return {kInf, kInf, true}; }

    double mid() const {
        if (std::isinf(hi)) return hi;
        return 0.5 * (lo + hi);
    }
    double width() const { return hi - lo; }
    bool finite() const { return std::isfinite(hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

inline Enclosure add(const Enclosure& a, const Enclosure& b) {
    if (!a.finite() || !b.finite()) return Enclosure::divergent();
    if (a.exact && b.exact) {
        double s = a.lo + b.lo;
        // one rounding each way unless the sum is representable
        return {step_down(s, 1), step_up(s, 1), false};
    }
    return {step_down(a.lo + b.lo, 1), step_up(a.hi + b.hi, 1), false};
}

// Product of certified-nonnegative quantities. An exactly-zero factor
// absorbs everything, including a divergent co-factor (no mass, no sum).
inline Enclosure mul_nonneg(const Enclosure& a, const Enclosure& b) {
    if (a.exact && a.lo == 0.0) return Enclosure::point(0.0);
    if (b.exact && b.lo == 0.0) return Enclosure::point(0.0);
    if (!a.finite() || !b.finite()) return Enclosure::divergent();
    return {step_down(a.lo * b.lo), step_up(a.hi * b.hi), false};
}

// e-th power of a certified-nonnegative quantity, e > 0 (monotone in the base).
inline Enclosure pow_nonneg(const Enclosure& a, double e) {
    if (!a.finite()) return Enclosure::divergent();
    return {step_down(std::pow(a.lo, e)), step_up(std::pow(a.hi, e)), false};
}

inline Enclosure scale_nonneg(const Enclosure& a, double c) {
    if (c == 0.0) return Enclosure::point(0.0);
    if (!a.finite()) return Enclosure::divergent();
    return {step_down(a.lo * c), step_up(a.hi * c), false};
}

// Neumaier-compensated accumulation with an explicit rounding budget.
//
// Budget accounting (the per-build constants promised in the docs):
//   |value() - true sum| <= term_budget + |x|-sum * eps * (2 + 8 n eps)
// where term_budget collects the callers' per-term evaluation error bounds
// (|term| * rel_err). Sums of exactly-evaluated integers stay exact while
// the running magnitude is below 2^53.
class CompensatedSum {
public:
    void add(double x, double rel_err = 0.0) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::fabs(x);
        term_budget_ += std::fabs(x) * rel_err;
        ++count_;
        if (rel_err != 0.0 || x != std::floor(x)) integral_ = false;
    }

    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_; }
    std::size_t count() const { return count_; }

    bool exact() const { return integral_ && abs_ < kExactIntLimit; }

    double budget() const {
        if (exact()) return term_budget_;
        return term_budget_ + abs_ * kEps * (2.0 + 8.0 * double(count_) * kEps);
    }

    Enclosure enclosure() const {
        double b = budget();
        if (b == 0.0) return Enclosure::point(value());
        return Enclosure::around(value(), b);
    }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
    double term_budget_ = 0.0;
    std::size_t count_ = 0;
    bool integral_ = true;
};

} // namespace hardyline

#endif

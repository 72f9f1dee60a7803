#ifndef HARDYLINE_WEIGHTS_HPP
#define HARDYLINE_WEIGHTS_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hardyline/enclosure.hpp"
#include "hardyline/errors.hpp"

namespace hardyline {

// Integrability exponent p > 1; construction rejects anything else.
class Exponent {
public:
    explicit Exponent(double p) : p_(p) {
        if (!(p > 1.0)) throw domain_error("Exponent: p must be > 1");
    }
    double value() const { return p_; }
    // exponent of the dual sum sum nu(k)^(-1/(p-1))
    double dual() const { return -1.0 / (p_ - 1.0); }

private:
    double p_;
};

// Behaviour of a Table weight past its stored values.
struct TailModel {
    enum class Kind { None, PowerLike, Zero };
    Kind kind = Kind::None;
    double exponent = 0.0; // PowerLike: w(n) ~ w(L) * (n/L)^exponent beyond the table
    long valid_from = 0;

    static TailModel none() { return {Kind::None, 0.0, 0}; }
    static TailModel zero() { return {Kind::Zero, 0.0, 0}; }
    static TailModel power_like(double exponent, long valid_from) {
        return {Kind::PowerLike, exponent, valid_from};
    }
};

// Positive weight sequence on N* = {1, 2, ...}.
class WeightFamily {
public:
    struct Power {
        double alpha;
    };
    // 1 at n = 1, n^-1 log^-p(n) for n >= 2 (the critical-exponent weight)
    struct CriticalLog {
        double p;
    };
    struct Shift {
        long k;
        std::shared_ptr<const WeightFamily> base;
    };
    struct Scaled {
        double c;
        std::shared_ptr<const WeightFamily> base;
    };
    struct Table {
        std::vector<double> values;
        TailModel tail;
    };
    using Variant = std::variant<Power, CriticalLog, Shift, Scaled, Table>;

    static WeightFamily power(double alpha) { return WeightFamily(Power{alpha}); }
    static WeightFamily critical_log(double p);
    static WeightFamily shift(long k, WeightFamily base);
    static WeightFamily scaled(double c, WeightFamily base);
    static WeightFamily table(std::vector<double> values, TailModel tail);

    // spec grammar: power:<a> | critlog:<p> | shift:<k>(<spec>) |
    //               scale:<c>(<spec>) | table:<path>
    static WeightFamily parse(std::string_view spec);
    static WeightFamily load_table(const std::string& path);

    double eval(long n) const;
    const Variant& variant() const { return v_; }
    std::string describe() const;

private:
    explicit WeightFamily(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

double eval(const WeightFamily& w, long n);

// Encloses sum_{k=1..n} w(k)^q by compensated summation. n = 0 is the
// exact empty sum [0, 0].
Enclosure powered_partial_sum(const WeightFamily& w, double q, long n);

// Encloses sum_{k=r..infinity} w(k)^q. Finite tails are bracketed by the
// convex-comparison pair
//   integral_{C+1} f + f(C+1)/2  <=  tail past C  <=  integral_{C+1/2} f
// after an explicit head sum up to C = max(r, 10^4). Divergent tails
// (effective exponent >= -1) come back as [+inf, +inf].
Enclosure powered_tail_sum(const WeightFamily& w, double q, long r);

// One term w(n)^q with its relative evaluation-error bound; rel_err == 0
// marks an exactly representable value.
struct TermValue {
    double value;
    double rel_err;
};
TermValue powered_term(const WeightFamily& w, double q, long n);

// True if sum w(k)^q diverges; throws tail_unknown when undecidable.
bool powered_sum_diverges(const WeightFamily& w, double q);

// Streaming prefix sums of w(k)^q with per-index Enclosure snapshots.
class PoweredSumAccumulator {
public:
    PoweredSumAccumulator(const WeightFamily& w, double q) : w_(&w), q_(q) {}

    // extends the sum through index n and returns the enclosure of the prefix
    Enclosure advance_to(long n) {
        while (next_ <= n) {
            TermValue t = powered_term(*w_, q_, next_);
            sum_.add(t.value, t.rel_err);
            ++next_;
        }
        return sum_.enclosure();
    }
    long position() const { return next_ - 1; }

private:
    const WeightFamily* w_;
    double q_;
    long next_ = 1;
    CompensatedSum sum_;
};

} // namespace hardyline

#endif

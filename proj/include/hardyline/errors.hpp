#ifndef HARDYLINE_ERRORS_HPP
#define HARDYLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardyline {

// Bad arguments or unparseable input. CLI maps this to exit code 2.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
struct domain_error : invalid_input {
    using invalid_input::invalid_input;
};

// A finite table was queried past its data and carries no tail model.
struct out_of_table : invalid_input {
    using invalid_input::invalid_input;
};

// Convergence of an infinite sum cannot be decided for this weight.
struct tail_unknown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scanned supremum was still rising at the end of the window. CLI exit 3.
struct inconclusive_scan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rayleigh quotient requested for a vector vanishing mu-a.e.
struct zero_denominator : invalid_input {
    using invalid_input::invalid_input;
};

// Least-squares design matrix condition number above the cutoff. CLI exit 3.
struct ill_conditioned : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hardyline

#endif

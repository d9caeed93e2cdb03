#pragma once

#include <cmath>
#include <stdexcept>

namespace snc {

// Tail bounds for X ~ Bin(n, p). Both return the bound value of the closed
// form, not clamped to 1, so callers can inspect how loose the bound is.

// P[|X - np| >= delta*np] <= 2*exp(-delta^2*np/3), for 0 < delta < 1.
inline double chernoff_two_sided(double n, double p, double delta) {
    if (n < 0) throw std::invalid_argument("chernoff_two_sided: n < 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("chernoff_two_sided: p outside [0,1]");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("chernoff_two_sided: delta outside (0,1)");
    return 2.0 * std::exp(-delta * delta * n * p / 3.0);
}

// P[X >= (1+delta)*np] <= (e^delta / (1+delta)^(1+delta))^(np), for delta > 0.
// Evaluated as exp(np * (delta - (1+delta)*log1p(delta))) for stability.
inline double chernoff_upper(double n, double p, double delta) {
    if (n < 0) throw std::invalid_argument("chernoff_upper: n < 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("chernoff_upper: p outside [0,1]");
    if (!(delta > 0.0)) throw std::invalid_argument("chernoff_upper: delta <= 0");
    return std::exp(n * p * (delta - (1.0 + delta) * std::log1p(delta)));
}

}  // namespace snc

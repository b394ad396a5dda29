#include "egtl/params.hpp"

#include <cmath>

namespace egtl {

EgtlParams::EgtlParams(double p, double theta, int k) : p_(p), theta_(theta), k_(k) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("EgtlParams: p must lie strictly in (0, 1), got " +
                                    std::to_string(p));
    if (p > 1.0 - 1e-12)
        throw std::invalid_argument("EgtlParams: p above 1 - 1e-12 is outside the supported range");
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("EgtlParams: theta must be positive and finite, got " +
                                    std::to_string(theta));
    if (k < 1) throw std::invalid_argument("EgtlParams: k must be a positive integer, got " +
                                           std::to_string(k));
}

}  // namespace egtl

#include "fflab/fourier/exponents.hpp"

#include <algorithm>

#include "fflab/errors.hpp"

namespace fflab {

double stein_tomas_transfer(double alpha, double theta, double d_tilde) {
    if (alpha < 0 || d_tilde <= 0 || theta <= 0 || theta > 1)
        throw ConfigError("stein_tomas_transfer: need alpha >= 0, d_tilde > 0, theta in (0,1]");
    return std::max(0.0, theta * alpha - d_tilde * (1.0 - theta) / 4.0);
}

double stein_tomas_exponent(int d) { return (2.0 * d + 2.0) / (d - 1.0); }

double conjectured_exponent(int d) { return 2.0 * d / (d - 1.0); }

} // namespace fflab

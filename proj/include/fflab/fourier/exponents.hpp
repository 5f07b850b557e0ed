#pragma once

namespace fflab {

// R*(q -> p) <= C |F|^alpha
struct ExponentBound {
    double p_exp;
    double q_exp;
    double log_constant;
};

// max(0, theta*alpha - d_tilde (1 - theta)/4)
double stein_tomas_transfer(double alpha, double theta, double d_tilde);

double stein_tomas_exponent(int d);   // (2d+2)/(d-1)
double conjectured_exponent(int d);   // 2d/(d-1)

} // namespace fflab

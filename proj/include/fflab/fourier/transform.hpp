#pragma once

#include "fflab/ff/ffunction.hpp"
#include "fflab/qforms/subspace.hpp"

namespace fflab {

// f^(xi) = sum_x f(x) e(-x.xi), d passes of a p-point DFT.
FFunction fourier_transform(const FFunction& f);
// p^{-d} sum_xi g(xi) e(x.xi)
FFunction inverse_transform(const FFunction& g);

// Double-sum references for the fast paths above.
FFunction fourier_transform_naive(const FFunction& f);
FFunction inverse_transform_naive(const FFunction& g);

// Unnormalized in-place pass: data <- sum_k data_k e(sign * k.xi); sign is +1 or -1.
void dft_inplace(std::vector<cd>& data, int p, int d, int sign);

struct MixedNormSpec {
    Subspace V;
    Subspace W;
    double outer_exp;  // q, over v (and t)
    double inner_exp;  // p, over w
    bool include_t;
};

// (sum_{v,t} (sum_w |F(w+v,t)|^p)^{q/p})^{1/q}; normalized divides each sum by its cardinality.
double mixed_norm(const FFunction& F, const MixedNormSpec& spec, Measure m);

} // namespace fflab

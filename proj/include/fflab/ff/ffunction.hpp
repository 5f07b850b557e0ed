#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "fflab/ff/field.hpp"

namespace fflab {

enum class Measure { counting, normalized };

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense complex function on F_p^d, little-endian base-p indexing.
class FFunction {
public:
    FFunction(const PrimeField& F, int d);
    FFunction(const PrimeField& F, int d, std::vector<cd> data);

    const PrimeField& field() const { return F_; }
    int p() const { return F_.p(); }
    int dim() const { return d_; }
    std::uint64_t size() const { return data_.size(); }

    cd& operator[](std::uint64_t i) { return data_[i]; }
    const cd& operator[](std::uint64_t i) const { return data_[i]; }
    cd& at(const FFVector& x) { return data_[encode(x, F_.p())]; }
    const cd& at(const FFVector& x) const { return data_[encode(x, F_.p())]; }

    std::vector<cd>& data() { return data_; }
    const std::vector<cd>& data() const { return data_; }

    static FFunction delta(const PrimeField& F, int d, const FFVector& x);
    static FFunction constant(const PrimeField& F, int d, cd value);

private:
    PrimeField F_;
    int d_;
    std::vector<cd> data_;
};

// (sum |f|^p_exp * w)^{1/p_exp}, w = 1 (counting) or p^{-d} (normalized); p_exp = kInf gives max |f|.
double lp_norm(const std::vector<cd>& v, double p_exp, double weight);
double lp_norm(const FFunction& f, double p_exp, Measure m);

// <f, g> = sum f conj(g), times p^{-d} under the normalized measure.
cd inner(const FFunction& f, const FFunction& g, Measure m);

double max_abs_diff(const std::vector<cd>& a, const std::vector<cd>& b);

} // namespace fflab

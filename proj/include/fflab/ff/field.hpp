#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fflab/errors.hpp"

namespace fflab {

using cd = std::complex<double>;

// Field elements are plain ints in [0, p).
using FFVector = std::vector<int>;

// Largest p^d the enumeration code will touch.
constexpr std::uint64_t kSizeGuard = std::uint64_t(1) << 31;

class PrimeField {
public:
    explicit PrimeField(int p);

    int p() const { return p_; }
    int add(int a, int b) const { int s = a + b; return s >= p_ ? s - p_ : s; }
    int sub(int a, int b) const { int s = a - b; return s < 0 ? s + p_ : s; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }
    int mul(int a, int b) const { return int((long long)a * b % p_); }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int reduce(long long v) const { long long r = v % p_; return int(r < 0 ? r + p_ : r); }
    int pow(int a, long long e) const;
    bool is_square(int a) const { return qr_[a]; }
    // 2^{-1} mod p
    int half() const { return (p_ + 1) / 2; }

    int dot(const FFVector& a, const FFVector& b) const;
    FFVector vadd(const FFVector& a, const FFVector& b) const;
    FFVector vsub(const FFVector& a, const FFVector& b) const;
    FFVector vscale(int c, const FFVector& a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    int p_;
    std::vector<int> inv_;
    std::vector<bool> qr_;
};

bool is_prime(int n);

// p^d with the size guard; `what` names the offending parameter in the error.
std::uint64_t checked_size(int p, int d, const char* what = "p^d");

// Little-endian base-p index: coordinate 0 is the fastest digit.
std::uint64_t encode(const FFVector& v, int p);
FFVector decode(std::uint64_t idx, int p, int d);
void decode_into(std::uint64_t idx, int p, FFVector& out);

// All p^d points in index order.
std::vector<FFVector> enumerate_points(const PrimeField& F, int d);

class CharacterTable {
public:
    explicit CharacterTable(int p);
    int p() const { return p_; }
    const cd& operator()(int k) const { return values_[k]; }
    // Accepts any integer exponent.
    const cd& at(long long k) const {
        long long r = k % p_;
        return values_[r < 0 ? r + p_ : r];
    }
    const std::vector<cd>& values() const { return values_; }

private:
    int p_;
    std::vector<cd> values_;
};

// e(x) = exp(2 pi i x / p)
cd char_eval(const PrimeField& F, int x);

} // namespace fflab

#include "fflab/ff/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fflab {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; (long long)k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (p < 3 || !is_prime(p))
        throw ConfigError("field modulus must be an odd prime, got " + std::to_string(p));
    inv_.assign(p, 0);
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if ((long long)a * b % p == 1) { inv_[a] = b; break; }
    qr_.assign(p, false);
    for (int a = 0; a < p; ++a) qr_[(long long)a * a % p] = true;
}

int PrimeField::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of 0 in F_" + std::to_string(p_));
    return inv_[a];
}

int PrimeField::pow(int a, long long e) const {
    long long r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return int(r);
}

int PrimeField::dot(const FFVector& a, const FFVector& b) const {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
    return int(s % p_);
}

FFVector PrimeField::vadd(const FFVector& a, const FFVector& b) const {
    FFVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
    return r;
}

FFVector PrimeField::vsub(const FFVector& a, const FFVector& b) const {
    FFVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
    return r;
}

FFVector PrimeField::vscale(int c, const FFVector& a) const {
    FFVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul(c, a[i]);
    return r;
}

std::uint64_t checked_size(int p, int d, const char* what) {
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) {
        n *= std::uint64_t(p);
        if (n > kSizeGuard)
            throw SizeOverflow(std::string(what) + " = " + std::to_string(p) + "^" +
                               std::to_string(d) + " exceeds 2^31");
    }
    return n;
}

std::uint64_t encode(const FFVector& v, int p) {
    std::uint64_t idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * p + std::uint64_t(v[i]);
    return idx;
}

FFVector decode(std::uint64_t idx, int p, int d) {
    FFVector v(d);
    for (int i = 0; i < d; ++i) {
        v[i] = int(idx % p);
        idx /= p;
    }
    return v;
}

void decode_into(std::uint64_t idx, int p, FFVector& out) {
    for (auto& c : out) {
        c = int(idx % p);
        idx /= p;
    }
}

std::vector<FFVector> enumerate_points(const PrimeField& F, int d) {
    if (d < 1) throw ConfigError("dimension must be >= 1");
    auto n = checked_size(F.p(), d);
    std::vector<FFVector> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(decode(i, F.p(), d));
    return out;
}

CharacterTable::CharacterTable(int p) : p_(p), values_(p) {
    for (int k = 0; k < p; ++k) {
        double a = 2.0 * std::numbers::pi * k / p;
        values_[k] = cd(std::cos(a), std::sin(a));
    }
    values_[0] = cd(1.0, 0.0);
}

cd char_eval(const PrimeField& F, int x) {
    double a = 2.0 * std::numbers::pi * x / F.p();
    return x == 0 ? cd(1.0, 0.0) : cd(std::cos(a), std::sin(a));
}

} // namespace fflab

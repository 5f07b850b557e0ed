#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "fflab/fourier/exponents.hpp"
#include "fflab/fourier/opnorm.hpp"
#include "fflab/harness/runner.hpp"

namespace fflab::harness {

namespace {

// a/b in lowest terms unless the stated form is wanted verbatim.
std::string frac(int a, int b, bool reduce = true) {
    char buf[64];
    double v = double(a) / b;
    if (reduce) {
        int g = std::gcd(a, b);
        a /= g;
        b /= g;
    }
    if (b == 1) std::snprintf(buf, sizeof buf, "%d", a);
    else std::snprintf(buf, sizeof buf, "%d/%d = %.5f", a, b, v);
    return buf;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

std::vector<TableRow> exponent_table() {
    std::vector<TableRow> rows;
    for (int d : {3, 5}) {
        std::string D = "d=" + std::to_string(d) + " ";
        double st = stein_tomas_exponent(d), cj = conjectured_exponent(d);
        rows.push_back({D + "conjectured extension exponent p = 2d/(d-1)", frac(2 * d, d - 1), cj, false});
        rows.push_back({D + "Stein-Tomas exponent p = (2d+2)/(d-1)", frac(2 * d + 2, d - 1), st, false});
    }
    rows.push_back({"d=3 improvement delta_3", frac(4, 10, false), 4.0 / 10.0, false});
    rows.push_back({"d=3 extension exponent p = 4 - delta_3 (hyperbolic paraboloid)", frac(18, 5), 18.0 / 5.0, false});
    rows.push_back({"d=3 sharp q for p = 18/5", frac(9, 4), 9.0 / 4.0, false});
    rows.push_back({"d=5 improvement delta_5 (minus epsilon)", frac(1, 16), 1.0 / 16.0, false});
    rows.push_back({"d=5 restriction L^p -> L^{3/2}(P) holds for p below", frac(47, 31), 47.0 / 31.0, false});
    for (int d : {3, 5})
        for (int p : {3, 5}) {
            auto S = Surface::paraboloid(PrimeField(p), d);
            double r = exact_r22(*S);
            rows.push_back({"measured R*(2->2), paraboloid d=" + std::to_string(d) + " p=" + std::to_string(p), num(r),
                            r, true});
        }
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.label.size());
    os << "source       " << "quantity" << std::string(w - 8 + 2, ' ') << "value\n";
    for (const auto& r : rows) {
        os << (r.measured ? "measured     " : "asymptotic   ") << r.label << std::string(w - r.label.size() + 2, ' ')
           << r.value << '\n';
    }
    return os.str();
}

} // namespace fflab::harness

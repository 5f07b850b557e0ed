#include <algorithm>
#include <numeric>

#include "fflab/ff/random.hpp"
#include "fflab/kakeya/kakeya.hpp"

namespace fflab {

std::vector<FFVector> all_directions(const PrimeField& F, int m) {
    int p = F.p();
    std::vector<FFVector> out;
    for (int k = m - 1; k >= 0; --k) {
        std::uint64_t n = checked_size(p, k);
        for (std::uint64_t i = 0; i < n; ++i) {
            FFVector v = decode(i, p, k);
            v.push_back(1);
            v.resize(m, 0);
            out.push_back(std::move(v));
        }
    }
    return out;
}

namespace {

int lead(const FFVector& v) {
    for (int k = int(v.size()) - 1; k >= 0; --k)
        if (v[k] != 0) return k;
    return -1;
}

// One base per parallel line: points with a zero in the direction's leading coordinate.
std::vector<FFVector> line_bases(const PrimeField& F, const FFVector& v) {
    int p = F.p(), m = int(v.size()), k = lead(v);
    std::vector<FFVector> out;
    std::uint64_t n = checked_size(p, m - 1);
    for (std::uint64_t i = 0; i < n; ++i) {
        FFVector c = decode(i, p, m - 1);
        c.insert(c.begin() + k, 0);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::uint64_t> line_idx(const PrimeField& F, const FFVector& a, const FFVector& v) {
    std::vector<std::uint64_t> out(F.p());
    for (int s = 0; s < F.p(); ++s) out[s] = encode(F.vadd(a, F.vscale(s, v)), F.p());
    return out;
}

struct LineTable {
    std::vector<FFVector> dirs;
    std::vector<std::vector<FFVector>> bases;
    std::vector<std::vector<std::vector<std::uint64_t>>> idx;  // [dir][base] -> points
};

LineTable make_table(const PrimeField& F, int m) {
    LineTable T;
    T.dirs = all_directions(F, m);
    for (auto& v : T.dirs) {
        T.bases.push_back(line_bases(F, v));
        std::vector<std::vector<std::uint64_t>> li;
        for (auto& a : T.bases.back()) li.push_back(line_idx(F, a, v));
        T.idx.push_back(std::move(li));
    }
    return T;
}

KakeyaInstance from_choice(const PrimeField& F, int m, const LineTable& T, const std::vector<int>& choice) {
    KakeyaInstance K{m, std::vector<char>(checked_size(F.p(), m), 0), {}};
    for (size_t d = 0; d < T.dirs.size(); ++d) {
        for (auto j : T.idx[d][choice[d]]) K.member[j] = 1;
        K.witness.push_back({T.dirs[d], T.bases[d][choice[d]]});
    }
    return K;
}

std::uint64_t count_points(const KakeyaInstance& K) {
    return std::uint64_t(std::count(K.member.begin(), K.member.end(), char(1)));
}

std::vector<int> local_search_choice(const PrimeField& F, const LineTable& T, Rng& rng, std::uint64_t npts) {
    size_t nd = T.dirs.size();
    std::vector<int> cnt(npts, 0), choice(nd, 0);
    std::vector<size_t> order(nd);
    std::iota(order.begin(), order.end(), 0);
    for (size_t i = nd; i > 1; --i) std::swap(order[i - 1], order[rng.below(int(i))]);
    (void)F;
    auto fresh = [&](size_t d, int b) {
        int s = 0;
        for (auto j : T.idx[d][b]) s += cnt[j] == 0;
        return s;
    };
    auto pick = [&](size_t d) {
        int best = -1, bestv = 1 << 30, ties = 0;
        for (int b = 0; b < int(T.bases[d].size()); ++b) {
            int v = fresh(d, b);
            if (v < bestv) {
                bestv = v;
                best = b;
                ties = 1;
            } else if (v == bestv && rng.below(++ties) == 0) {
                best = b;
            }
        }
        return best;
    };
    for (auto d : order) {
        choice[d] = pick(d);
        for (auto j : T.idx[d][choice[d]]) ++cnt[j];
    }
    for (int pass = 0; pass < 50; ++pass) {
        bool improved = false;
        for (auto d : order) {
            for (auto j : T.idx[d][choice[d]]) --cnt[j];
            int cur = fresh(d, choice[d]);
            int b = pick(d);
            if (fresh(d, b) < cur) {
                choice[d] = b;
                improved = true;
            }
            for (auto j : T.idx[d][choice[d]]) ++cnt[j];
        }
        if (!improved) break;
    }
    return choice;
}

}  // namespace

KakeyaAudit kakeya_set_audit(const PrimeField& F, const KakeyaInstance& K) {
    int p = F.p(), m = K.m;
    if (K.member.size() != checked_size(p, m)) throw ConfigError("Kakeya bitmap has the wrong size");
    auto in_set = [&](const FFVector& a, const FFVector& v) {
        for (auto j : line_idx(F, a, v))
            if (!K.member[j]) return false;
        return true;
    };
    KakeyaAudit res{true, 0.0, 0};
    for (auto& v : all_directions(F, m)) {
        bool ok = false;
        for (auto& [dir, a] : K.witness)
            if (dir == v && in_set(a, v)) {
                ok = true;
                break;
            }
        if (!ok)
            for (auto& a : line_bases(F, v))
                if (in_set(a, v)) {
                    ok = true;
                    break;
                }
        if (!ok) ++res.missing_directions;
    }
    res.is_kakeya = res.missing_directions == 0;
    res.density = double(count_points(K)) / double(K.member.size());
    return res;
}

const char* to_string(KakeyaConstruction c) {
    switch (c) {
    case KakeyaConstruction::full: return "full";
    case KakeyaConstruction::quadratic: return "quadratic";
    case KakeyaConstruction::random: return "random";
    case KakeyaConstruction::local_search: return "local_search";
    }
    return "?";
}

KakeyaInstance build_kakeya(const PrimeField& F, int m, KakeyaConstruction c, std::uint64_t seed) {
    if (m < 2) throw ConfigError("Kakeya sets need m >= 2");
    int p = F.p();
    std::uint64_t npts = checked_size(p, m);
    if (c == KakeyaConstruction::full) return KakeyaInstance{m, std::vector<char>(npts, 1), {}};
    LineTable T = make_table(F, m);
    Rng rng(seed);
    std::vector<int> choice(T.dirs.size(), 0);
    if (c == KakeyaConstruction::local_search) {
        std::uint64_t best = npts + 1;
        for (int restart = 0; restart < 24; ++restart) {
            auto ch = local_search_choice(F, T, rng, npts);
            auto n = count_points(from_choice(F, m, T, ch));
            if (n < best) {
                best = n;
                choice = ch;
            }
        }
        return from_choice(F, m, T, choice);
    }
    for (size_t d = 0; d < T.dirs.size(); ++d) {
        const FFVector& v = T.dirs[d];
        bool vertical = v[m - 1] == 1;
        if (c == KakeyaConstruction::random) {
            choice[d] = rng.below(int(T.bases[d].size()));
        } else if (vertical) {
            // b(eta) = (eta_i^2); bases are (b, 0).
            FFVector a(m, 0);
            for (int i = 0; i + 1 < m; ++i) a[i] = F.mul(v[i], v[i]);
            auto it = std::find(T.bases[d].begin(), T.bases[d].end(), a);
            choice[d] = int(it - T.bases[d].begin());
        } else {
            // horizontal directions through the origin
            choice[d] = 0;
        }
    }
    return from_choice(F, m, T, choice);
}

double exhaustive_min_kakeya_density(const PrimeField& F, int m) {
    LineTable T = make_table(F, m);
    std::uint64_t npts = checked_size(F.p(), m);
    double combos = 1.0;
    for (auto& b : T.bases) combos *= double(b.size());
    if (combos > 5e7) throw ConfigError("exhaustive Kakeya search is too large");
    std::vector<int> cnt(npts, 0);
    int best = int(npts), cur = 0;
    size_t nd = T.dirs.size();
    auto rec = [&](auto&& self, size_t d) -> void {
        if (cur >= best) return;
        if (d == nd) {
            best = cur;
            return;
        }
        for (auto& li : T.idx[d]) {
            int add = 0;
            for (auto j : li) add += cnt[j]++ == 0;
            cur += add;
            self(self, d + 1);
            cur -= add;
            for (auto j : li) --cnt[j];
        }
    };
    rec(rec, 0);
    return double(best) / double(npts);
}

} // namespace fflab

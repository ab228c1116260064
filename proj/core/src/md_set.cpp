#include "gridconvex/md_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridconvex {

std::size_t floor_log2(std::size_t n) {
    std::size_t log = 0;
    while (n >>= 1) ++log;
    return log;
}

bool is_md_sequence(std::span<const Rational> values, const Rational& ratio,
                    MDDirection direction) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] >= values[i + 1]) return false;
    if (values.size() < 3) return true;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        Rational prev = values[i] - values[i - 1];
        Rational next = values[i + 1] - values[i];
        if (direction == MDDirection::decreasing_differences) {
            if (ratio > 1 ? (next * ratio > prev) : (next >= prev)) return false;
        } else {
            if (ratio > 1 ? (next < prev * ratio) : (next <= prev)) return false;
        }
    }
    return true;
}

bool validate(const MDSet& set) {
    return set.ratio >= 1 && is_md_sequence(set.values, set.ratio, set.direction);
}

namespace {

std::vector<Rational> sorted_unique(std::span<const Rational> values) {
    std::vector<Rational> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Longest subsequence of v (sorted increasing) whose consecutive differences
// shrink by a factor >= ratio. Returns chosen indices.
std::vector<std::size_t> longest_shrinking(const std::vector<Rational>& v,
                                           const Rational& ratio) {
    const std::size_t n = v.size();
    if (n <= 2) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    // f[i][j]: longest valid subsequence ending with (v[i], v[j]), i < j.
    std::vector<std::vector<int>> f(n, std::vector<int>(n, 0));
    std::vector<std::vector<std::size_t>> parent(n, std::vector<std::size_t>(n, n));
    // pref[i][k]: best f[k'][i] over k' <= k, with the smallest achieving k'.
    std::vector<std::vector<std::pair<int, std::size_t>>> pref(
        n, std::vector<std::pair<int, std::size_t>>(n, {0, n}));
    int best = std::min<std::size_t>(n, 2);
    std::pair<std::size_t, std::size_t> best_pair{n, n};

    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            f[i][j] = 2;
            // Need v[i] - v[k] >= ratio * (v[j] - v[i]), i.e. v[k] <= bound.
            Rational bound = v[i] - ratio * (v[j] - v[i]);
            auto it = std::upper_bound(v.begin(), v.begin() + i, bound);
            if (it != v.begin()) {
                std::size_t k_max = static_cast<std::size_t>(it - v.begin()) - 1;
                auto [val, arg] = pref[i][k_max];
                if (val > 0 && val + 1 > f[i][j]) {
                    f[i][j] = val + 1;
                    parent[i][j] = arg;
                }
            }
            if (f[i][j] > best) {
                best = f[i][j];
                best_pair = {i, j};
            }
            // Fold f[i][j] into pref[j][i] for future transitions from (j, ...).
            std::pair<int, std::size_t> cur{f[i][j], i};
            pref[j][i] = (i == 0) ? cur
                                  : (pref[j][i - 1].first >= cur.first ? pref[j][i - 1] : cur);
        }
    }

    std::vector<std::size_t> idx;
    if (best_pair.first == n) {
        idx.push_back(0);
        if (n > 1) idx.push_back(1);
        return idx;
    }
    std::size_t i = best_pair.first, j = best_pair.second;
    idx = {j, i};
    while (parent[i][j] != n) {
        std::size_t k = parent[i][j];
        idx.push_back(k);
        j = i;
        i = k;
    }
    std::reverse(idx.begin(), idx.end());
    return idx;
}

MDSet dp_extract(const std::vector<Rational>& v, const Rational& ratio) {
    // Decreasing direction on v directly.
    std::vector<std::size_t> dec = longest_shrinking(v, ratio);
    // Increasing direction via the reflected values.
    std::vector<Rational> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[v.size() - 1 - i];
    std::vector<std::size_t> inc_r = longest_shrinking(w, ratio);

    MDSet out;
    out.ratio = ratio;
    if (dec.size() >= inc_r.size()) {
        out.direction = MDDirection::decreasing_differences;
        for (std::size_t i : dec) out.values.push_back(v[i]);
    } else {
        out.direction = MDDirection::increasing_differences;
        for (auto it = inc_r.rbegin(); it != inc_r.rend(); ++it)
            out.values.push_back(v[v.size() - 1 - *it]);
    }
    return out;
}

}  // namespace

MDSet md_extract(std::span<const Rational> values) {
    std::vector<Rational> v = sorted_unique(values);
    if (v.size() < 2) throw std::invalid_argument("md_extract: need at least 2 values");

    // Nested intervals: split at the count median, recurse on the side of
    // smaller length, so lengths at least halve at every step.
    std::size_t lo = 0, hi = v.size() - 1;
    std::vector<Rational> a_seq{v[lo]}, b_seq{v[hi]};
    while (hi - lo >= 2) {
        std::size_t mid = lo + (hi - lo) / 2;
        Rational left_len = v[mid] - v[lo];
        Rational right_len = v[hi] - v[mid];
        if (left_len <= right_len) hi = mid;
        else lo = mid;
        a_seq.push_back(v[lo]);
        b_seq.push_back(v[hi]);
    }

    auto distinct_inc = [](const std::vector<Rational>& s) {
        std::vector<Rational> out;
        for (const Rational& x : s)
            if (out.empty() || x != out.back()) out.push_back(x);
        return out;
    };
    std::vector<Rational> a_dist = distinct_inc(a_seq);  // increasing
    std::vector<Rational> b_dist = distinct_inc(b_seq);  // decreasing
    std::reverse(b_dist.begin(), b_dist.end());

    MDSet candidate;
    candidate.ratio = 2;
    if (a_dist.size() >= b_dist.size()) {
        candidate.values = std::move(a_dist);
        candidate.direction = MDDirection::decreasing_differences;
    } else {
        candidate.values = std::move(b_dist);
        candidate.direction = MDDirection::increasing_differences;
    }

    std::size_t bound = floor_log2(v.size()) / 2 + 1;
    if (candidate.size() >= std::max<std::size_t>(bound, 2) && validate(candidate))
        return candidate;
    // The halving walk does not always certify the factor-2 gap; fall back
    // to the exact search, which does.
    return dp_extract(v, Rational(2));
}

MDSet longest_ratio_md_subset(std::span<const Rational> values, const Rational& ratio) {
    std::vector<Rational> v = sorted_unique(values);
    if (v.empty()) throw std::invalid_argument("longest_ratio_md_subset: empty input");
    return dp_extract(v, ratio);
}

std::size_t max_md_subset_size(std::span<const Rational> values) {
    std::vector<Rational> v = sorted_unique(values);
    if (v.empty()) throw std::invalid_argument("max_md_subset_size: empty input");
    const std::size_t n = v.size();
    if (n <= 2) return n;

    // Strictly shrinking differences (ratio 1, strict).
    auto longest_strict = [](const std::vector<Rational>& u) {
        const std::size_t m = u.size();
        std::vector<std::vector<int>> f(m, std::vector<int>(m, 0));
        std::vector<std::vector<int>> pref(m, std::vector<int>(m, 0));
        int best = 2;
        for (std::size_t j = 1; j < m; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                f[i][j] = 2;
                // Need v[i] - v[k] > v[j] - v[i], i.e. v[k] < 2 v[i] - v[j].
                Rational bound = 2 * u[i] - u[j];
                auto it = std::lower_bound(u.begin(), u.begin() + i, bound);
                if (it != u.begin()) {
                    std::size_t k_max = static_cast<std::size_t>(it - u.begin()) - 1;
                    int val = pref[i][k_max];
                    if (val > 0) f[i][j] = std::max(f[i][j], val + 1);
                }
                best = std::max(best, f[i][j]);
                pref[j][i] = (i == 0) ? f[i][j] : std::max(pref[j][i - 1], f[i][j]);
            }
        }
        return best;
    };

    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = -v[n - 1 - i];
    return static_cast<std::size_t>(std::max(longest_strict(v), longest_strict(w)));
}

MDSet halving_md_set(std::size_t n, const Rational& r) {
    if (n < 2) throw std::invalid_argument("halving_md_set: need n >= 2");
    if (r < 2) throw std::invalid_argument("halving_md_set: need r >= 2");
    MDSet out;
    out.ratio = r;
    out.direction = MDDirection::decreasing_differences;
    out.values.reserve(n);
    Rational acc(0);
    out.values.push_back(acc);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        acc += rational_pow(r, static_cast<unsigned>(n - 2 - i));
        out.values.push_back(acc);
    }
    return out;
}

}  // namespace gridconvex

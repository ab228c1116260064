#pragma once

#include <span>
#include <vector>

#include "gridconvex/rational.hpp"

namespace gridconvex {

enum class MDDirection { increasing_differences, decreasing_differences };

// Strictly increasing values whose consecutive differences are strictly
// monotone in the declared direction; with ratio r > 1 each difference
// dominates (or is dominated by) its predecessor by a factor >= r.
struct MDSet {
    std::vector<Rational> values;
    Rational ratio = 1;
    MDDirection direction = MDDirection::decreasing_differences;

    std::size_t size() const { return values.size(); }
};

// Checks the MDSet invariant for the given values/ratio/direction.
bool is_md_sequence(std::span<const Rational> values, const Rational& ratio,
                    MDDirection direction);
bool validate(const MDSet& set);

// 2-MD subset of size >= floor(log2(n)/2) + 1, found by nested-interval
// halving (endpoint sequence with more distinct terms, ties prefer the
// lower endpoints). Falls back to an exact longest-2-MD-subset dynamic
// program when the halving output misses the 2-MD certificate.
MDSet md_extract(std::span<const Rational> values);

// Exact maximum cardinality of an MD subset, by dynamic programming over
// ordered pairs of the last two chosen elements, both directions.
std::size_t max_md_subset_size(std::span<const Rational> values);

// Largest subset whose differences shrink (or grow) by a factor >= ratio,
// exact DP; deterministic witness.
MDSet longest_ratio_md_subset(std::span<const Rational> values, const Rational& ratio);

// n-element r-MD set with decreasing differences: partial sums of the
// geometric sequence r^{n-2}, ..., r, 1 starting at 0.
MDSet halving_md_set(std::size_t n, const Rational& r);

std::size_t floor_log2(std::size_t n);

}  // namespace gridconvex

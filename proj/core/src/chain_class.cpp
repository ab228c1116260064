#include "gridconvex/chain_class.hpp"

#include <algorithm>
#include <array>

namespace gridconvex {

std::vector<ChainClass> ClassSet::to_list() const {
    std::vector<ChainClass> out;
    for (int i = 0; i < kNumClasses; ++i)
        if (bits_ >> i & 1u) out.push_back(static_cast<ChainClass>(i));
    return out;
}

bool is_cap_class(ChainClass c) { return static_cast<int>(c) < 4; }

std::pair<ChainClass, ChainClass> chain_parents(ChainClass chain) {
    switch (chain) {
        case ChainClass::chain_nw: return {ChainClass::cap_w, ChainClass::cap_n};
        case ChainClass::chain_ne: return {ChainClass::cap_n, ChainClass::cap_e};
        case ChainClass::chain_se: return {ChainClass::cap_e, ChainClass::cap_s};
        case ChainClass::chain_sw: return {ChainClass::cap_s, ChainClass::cap_w};
        default: throw std::invalid_argument("chain_parents: not a chain class");
    }
}

namespace {

enum class Mono { inc, dec, none };

Mono monotonicity(std::span<const Point2> seq, bool use_x) {
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int c = use_x ? cmp(seq[i].x, seq[i + 1].x) : cmp(seq[i].y, seq[i + 1].y);
        if (c >= 0) inc = false;
        if (c <= 0) dec = false;
    }
    if (inc) return Mono::inc;
    if (dec) return Mono::dec;
    return Mono::none;
}

// All interior turns strictly clockwise (right turns).
bool clockwise_reading(std::span<const Point2> seq) {
    for (std::size_t i = 0; i + 2 < seq.size(); ++i)
        if (orientation(seq[i], seq[i + 1], seq[i + 2]) >= 0) return false;
    return true;
}

ClassSet classify_reading(std::span<const Point2> seq) {
    ClassSet out;
    if (!clockwise_reading(seq)) return out;
    Mono mx = monotonicity(seq, true);
    Mono my = monotonicity(seq, false);
    if (mx == Mono::inc) out.insert(ChainClass::cap_n);
    if (mx == Mono::dec) out.insert(ChainClass::cap_s);
    if (my == Mono::inc) out.insert(ChainClass::cap_w);
    if (my == Mono::dec) out.insert(ChainClass::cap_e);
    for (ChainClass chain : {ChainClass::chain_nw, ChainClass::chain_ne,
                             ChainClass::chain_se, ChainClass::chain_sw}) {
        auto [a, b] = chain_parents(chain);
        if (out.contains(a) && out.contains(b)) out.insert(chain);
    }
    return out;
}

const std::array<std::string, kNumClasses> kClassNames = {
    "cap-n", "cap-w", "cap-s", "cap-e", "chain-nw", "chain-ne", "chain-se", "chain-sw"};

}  // namespace

ClassSet classify(std::span<const Point2> seq) {
    if (seq.empty()) return ClassSet();
    if (seq.size() == 1) return ClassSet::all();
    std::vector<Point2> rev(seq.rbegin(), seq.rend());
    return classify_reading(seq) | classify_reading(rev);
}

ChainClass reflect_class_x(ChainClass c) {
    switch (c) {
        case ChainClass::cap_n: return ChainClass::cap_n;
        case ChainClass::cap_s: return ChainClass::cap_s;
        case ChainClass::cap_w: return ChainClass::cap_e;
        case ChainClass::cap_e: return ChainClass::cap_w;
        case ChainClass::chain_nw: return ChainClass::chain_ne;
        case ChainClass::chain_ne: return ChainClass::chain_nw;
        case ChainClass::chain_se: return ChainClass::chain_sw;
        case ChainClass::chain_sw: return ChainClass::chain_se;
    }
    return c;
}

ChainClass reflect_class_y(ChainClass c) {
    switch (c) {
        case ChainClass::cap_n: return ChainClass::cap_s;
        case ChainClass::cap_s: return ChainClass::cap_n;
        case ChainClass::cap_w: return ChainClass::cap_w;
        case ChainClass::cap_e: return ChainClass::cap_e;
        case ChainClass::chain_nw: return ChainClass::chain_sw;
        case ChainClass::chain_sw: return ChainClass::chain_nw;
        case ChainClass::chain_ne: return ChainClass::chain_se;
        case ChainClass::chain_se: return ChainClass::chain_ne;
    }
    return c;
}

const std::string& class_name(ChainClass c) { return kClassNames[static_cast<int>(c)]; }

std::optional<ChainClass> class_from_name(const std::string& name) {
    auto it = std::find(kClassNames.begin(), kClassNames.end(), name);
    if (it == kClassNames.end()) return std::nullopt;
    return static_cast<ChainClass>(it - kClassNames.begin());
}

}  // namespace gridconvex

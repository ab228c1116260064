#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridconvex/geometry.hpp"

namespace gridconvex {

// Caps are clockwise convex vertex sequences monotone in one coordinate,
// named for the side of the polygon boundary they bulge towards:
//   cap_n: x strictly increases (upper arc)
//   cap_w: y strictly increases (left arc)
//   cap_s: x strictly decreases (lower arc)
//   cap_e: y strictly decreases (right arc)
// Chains are monotone in both coordinates; each chain class is the
// intersection of the two adjacent cap classes.
enum class ChainClass : std::uint8_t {
    cap_n = 0,
    cap_w = 1,
    cap_s = 2,
    cap_e = 3,
    chain_nw = 4,  // cap_w ∩ cap_n: x and y strictly increase
    chain_ne = 5,  // cap_n ∩ cap_e: x increases, y decreases
    chain_se = 6,  // cap_e ∩ cap_s: x and y strictly decrease
    chain_sw = 7,  // cap_s ∩ cap_w: x decreases, y increases
};

constexpr int kNumClasses = 8;

class ClassSet {
  public:
    constexpr ClassSet() = default;
    constexpr explicit ClassSet(std::uint8_t bits) : bits_(bits) {}

    static constexpr ClassSet all() { return ClassSet(0xff); }
    static constexpr ClassSet of(ChainClass c) {
        return ClassSet(static_cast<std::uint8_t>(1u << static_cast<int>(c)));
    }

    constexpr bool contains(ChainClass c) const {
        return (bits_ >> static_cast<int>(c)) & 1u;
    }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr void insert(ChainClass c) { bits_ |= 1u << static_cast<int>(c); }
    constexpr ClassSet operator|(ClassSet o) const { return ClassSet(bits_ | o.bits_); }
    constexpr ClassSet operator&(ClassSet o) const { return ClassSet(bits_ & o.bits_); }
    constexpr bool operator==(const ClassSet&) const = default;
    // True when every class in this set is also in o.
    constexpr bool subset_of(ClassSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr std::uint8_t bits() const { return bits_; }

    std::vector<ChainClass> to_list() const;

  private:
    std::uint8_t bits_ = 0;
};

bool is_cap_class(ChainClass c);

// The two cap classes whose intersection defines a chain class.
std::pair<ChainClass, ChainClass> chain_parents(ChainClass chain);

// Exact set of cap and chain classes containing the sequence. A sequence
// belongs to a class when either it or its reversal is a clockwise
// (right-turning, strictly convex) reading with the class's coordinate
// monotonicity. Sequences of one vertex belong to all classes; two-vertex
// sequences are classified by monotonicity alone.
ClassSet classify(std::span<const Point2> seq);

// Class image under axis reflections (x -> -x, y -> -y).
ChainClass reflect_class_x(ChainClass c);
ChainClass reflect_class_y(ChainClass c);

const std::string& class_name(ChainClass c);
std::optional<ChainClass> class_from_name(const std::string& name);

}  // namespace gridconvex

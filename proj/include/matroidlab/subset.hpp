#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matroidlab {

inline constexpr int max_ground_size = 24;

// Subset of a ground set with at most max_ground_size elements, stored as a
// bitmask. Element indices are 0-based and local to one matroid.
class subset {
public:
    constexpr subset() = default;
    constexpr explicit subset(std::uint32_t bits) : bits_(bits) {}

    static constexpr subset single(int e) { return subset(std::uint32_t(1) << e); }
    static constexpr subset full(int n) {
        return subset(n <= 0 ? 0u : (n >= 32 ? ~0u : (std::uint32_t(1) << n) - 1u));
    }
    static subset of(std::initializer_list<int> elems) {
        std::uint32_t b = 0;
        for (int e : elems) b |= std::uint32_t(1) << e;
        return subset(b);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
    constexpr bool contains(subset o) const { return (o.bits_ & ~bits_) == 0; }
    constexpr bool intersects(subset o) const { return (bits_ & o.bits_) != 0; }
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr subset with(int e) const { return subset(bits_ | (std::uint32_t(1) << e)); }
    constexpr subset without(int e) const { return subset(bits_ & ~(std::uint32_t(1) << e)); }
    constexpr subset complement(int n) const { return subset(full(n).bits_ & ~bits_); }

    friend constexpr subset operator|(subset a, subset b) { return subset(a.bits_ | b.bits_); }
    friend constexpr subset operator&(subset a, subset b) { return subset(a.bits_ & b.bits_); }
    friend constexpr subset operator^(subset a, subset b) { return subset(a.bits_ ^ b.bits_); }
    friend constexpr subset operator-(subset a, subset b) { return subset(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(subset a, subset b) { return a.bits_ == b.bits_; }
    friend constexpr auto operator<=>(subset a, subset b) { return a.bits_ <=> b.bits_; }

    class iterator {
    public:
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint32_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::string to_string() const;

private:
    std::uint32_t bits_ = 0;
};

std::vector<int> to_elements(subset s);
subset from_elements(const std::vector<int>& elems);

// Lexicographic order on the sorted element sequences, so {0,1} < {0,1,2} < {0,2}.
bool lex_less(subset a, subset b);

}  // namespace matroidlab

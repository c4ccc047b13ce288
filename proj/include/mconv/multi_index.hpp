#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mconv/errors.hpp"

namespace mconv {

// Multi-index in d coordinates (componentwise non-negative).  Comparison is
// lexicographic so multi-indices can key ordered maps deterministically.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : e_(dim, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> e) : e_(std::move(e)) {}
    // Braces always mean entries: MultiIndex({2}) is (2), MultiIndex(2) is (0,0).
    MultiIndex(std::initializer_list<std::uint32_t> e) : e_(e) {}
    static MultiIndex unit(std::size_t dim, std::size_t j);

    std::size_t dim() const { return e_.size(); }
    std::uint32_t operator[](std::size_t j) const { return e_[j]; }
    std::uint32_t& operator[](std::size_t j) { return e_[j]; }
    const std::vector<std::uint32_t>& entries() const { return e_; }

    // |alpha| = sum of entries.
    unsigned order() const;
    bool is_zero() const { return order() == 0; }

    MultiIndex plus(const MultiIndex& o) const;
    // Componentwise difference; requires o <= *this.
    MultiIndex minus(const MultiIndex& o) const;
    // Componentwise comparison (partial order).
    bool leq(const MultiIndex& o) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.e_ <=> b.e_;
    }

    std::string to_string() const; // "(a_1,...,a_d)"

private:
    std::vector<std::uint32_t> e_;
};

// Visit every alpha with alpha <= bound componentwise, in lexicographic order.
void for_each_leq(const std::vector<std::uint32_t>& bound,
                  const std::function<void(const MultiIndex&)>& fn);

// Visit every alpha in dimension dim with |alpha| <= max_order, lexicographic.
void for_each_order_leq(std::size_t dim, unsigned max_order,
                        const std::function<void(const MultiIndex&)>& fn);

} // namespace mconv

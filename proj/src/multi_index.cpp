#include "mconv/multi_index.hpp"

namespace mconv {

MultiIndex MultiIndex::unit(std::size_t dim, std::size_t j) {
    MultiIndex m(dim);
    m.e_.at(j) = 1;
    return m;
}

unsigned MultiIndex::order() const {
    unsigned s = 0;
    for (auto v : e_) s += v;
    return s;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
    if (dim() != o.dim()) throw DimensionMismatch(dim(), o.dim());
    MultiIndex r(dim());
    for (std::size_t j = 0; j < dim(); ++j) r.e_[j] = e_[j] + o.e_[j];
    return r;
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const {
    if (dim() != o.dim()) throw DimensionMismatch(dim(), o.dim());
    MultiIndex r(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        if (o.e_[j] > e_[j]) throw ValidationError("multi-index difference would be negative");
        r.e_[j] = e_[j] - o.e_[j];
    }
    return r;
}

bool MultiIndex::leq(const MultiIndex& o) const {
    if (dim() != o.dim()) throw DimensionMismatch(dim(), o.dim());
    for (std::size_t j = 0; j < dim(); ++j)
        if (e_[j] > o.e_[j]) return false;
    return true;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < dim(); ++j) {
        if (j) s += ",";
        s += std::to_string(e_[j]);
    }
    return s + ")";
}

void for_each_leq(const std::vector<std::uint32_t>& bound,
                  const std::function<void(const MultiIndex&)>& fn) {
    MultiIndex a(bound.size());
    const std::size_t d = bound.size();
    if (d == 0) { fn(a); return; }
    while (true) {
        fn(a);
        // odometer increment, most significant coordinate first
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (a[j] < bound[j]) { ++a[j]; break; }
            a[j] = 0;
            if (j == 0) return;
        }
    }
}

void for_each_order_leq(std::size_t dim, unsigned max_order,
                        const std::function<void(const MultiIndex&)>& fn) {
    for_each_leq(std::vector<std::uint32_t>(dim, max_order), [&](const MultiIndex& a) {
        if (a.order() <= max_order) fn(a);
    });
}

} // namespace mconv

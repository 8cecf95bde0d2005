#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmi {

/// Exponent multi-index of a geometric moment: (p,q) in 2D, (p,q,r) in 3D.
/// Ordered lexicographically on (p,q,r); 2D indices carry r = 0.
struct MomentIndex {
    std::uint8_t p = 0, q = 0, r = 0;

    constexpr MomentIndex() = default;
    constexpr MomentIndex(int p_, int q_) : p(std::uint8_t(p_)), q(std::uint8_t(q_)) {}
    constexpr MomentIndex(int p_, int q_, int r_)
        : p(std::uint8_t(p_)), q(std::uint8_t(q_)), r(std::uint8_t(r_)) {}

    int order() const { return int(p) + int(q) + int(r); }

    friend bool operator==(const MomentIndex& a, const MomentIndex& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
    friend bool operator!=(const MomentIndex& a, const MomentIndex& b) { return !(a == b); }
    friend bool operator<(const MomentIndex& a, const MomentIndex& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.q != b.q) return a.q < b.q;
        return a.r < b.r;
    }

    /// "mu21" in 2D, "mu201" in 3D.
    std::string name(int dim) const {
        std::string s = "mu";
        s += std::to_string(p);
        s += std::to_string(q);
        if (dim == 3) s += std::to_string(r);
        return s;
    }
};

/// All multi-indices with total order <= max_order, in lexicographic (p,q,r) order.
inline std::vector<MomentIndex> all_indices(int dim, int max_order) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dim must be 2 or 3");
    std::vector<MomentIndex> out;
    for (int p = 0; p <= max_order; ++p)
        for (int q = 0; p + q <= max_order; ++q) {
            if (dim == 2) {
                out.push_back(MomentIndex(p, q));
            } else {
                for (int r = 0; p + q + r <= max_order; ++r)
                    out.push_back(MomentIndex(p, q, r));
            }
        }
    return out;
}

inline std::size_t index_count(int dim, int max_order) {
    std::size_t n = std::size_t(max_order);
    return dim == 2 ? (n + 1) * (n + 2) / 2 : (n + 1) * (n + 2) * (n + 3) / 6;
}

}  // namespace gmi

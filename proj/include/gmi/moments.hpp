#pragma once

#include <array>
#include <vector>

#include "gmi/moment_index.hpp"
#include "gmi/point_set.hpp"

namespace gmi {

/// Dense table of moment values: every multi-index with total order
/// <= max_order is present, zeros stored explicitly.
class MomentVector {
public:
    MomentVector(int dim, int max_order);

    int dim() const { return dim_; }
    int max_order() const { return max_order_; }

    /// Throws std::out_of_range("insufficient moment order") beyond max_order.
    double at(const MomentIndex& idx) const;
    void set(const MomentIndex& idx, double v);

    double m00() const { return values_[0]; }

    const std::vector<MomentIndex>& indices() const { return indices_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::size_t rank(const MomentIndex& idx) const;

    int dim_;
    int max_order_;
    std::vector<MomentIndex> indices_;
    std::vector<double> values_;
};

/// Raw geometric moments of a discrete weighted set:
/// m_idx = sum_i w_i * prod_d coord_{i,d}^idx_d. Throws on empty input.
MomentVector raw_moments(const WeightedPointSet& ps, int max_order);

/// (m10/m00, m01/m00[, m001/m000]); throws on zero total weight.
std::array<double, 3> centroid(const MomentVector& mv);

/// Moments after translating the centroid to the origin; order-1 entries
/// vanish up to roundoff.
MomentVector central_moments(const WeightedPointSet& ps, int max_order);

}  // namespace gmi

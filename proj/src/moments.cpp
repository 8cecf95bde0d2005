#include "gmi/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace gmi {

MomentVector::MomentVector(int dim, int max_order) : dim_(dim), max_order_(max_order) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("dim must be 2 or 3");
    if (max_order < 0) throw std::invalid_argument("max_order must be nonnegative");
    indices_ = all_indices(dim, max_order);
    values_.assign(indices_.size(), 0.0);
}

std::size_t MomentVector::rank(const MomentIndex& idx) const {
    if (idx.order() > max_order_ || (dim_ == 2 && idx.r != 0))
        throw std::out_of_range("insufficient moment order: " + idx.name(dim_) +
                                " beyond max_order " + std::to_string(max_order_));
    // lexicographic position of (p,q[,r]) among indices with order <= max_order
    std::size_t pos = 0;
    int n = max_order_;
    if (dim_ == 2) {
        for (int p = 0; p < idx.p; ++p) pos += std::size_t(n - p + 1);
        pos += idx.q;
    } else {
        for (int p = 0; p < idx.p; ++p) {
            int m = n - p;
            pos += std::size_t(m + 1) * (m + 2) / 2;
        }
        for (int q = 0; q < idx.q; ++q) pos += std::size_t(n - idx.p - q + 1);
        pos += idx.r;
    }
    return pos;
}

double MomentVector::at(const MomentIndex& idx) const { return values_[rank(idx)]; }
void MomentVector::set(const MomentIndex& idx, double v) { values_[rank(idx)] = v; }

namespace {

/// Neumaier compensated accumulator; keeps high-order sums stable for large
/// point counts without a second pass.
struct Accumulator {
    long double sum = 0.0L, comp = 0.0L;

    void add(long double v) {
        long double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return double(sum + comp); }
};

MomentVector moments_about(const WeightedPointSet& ps, int max_order,
                           const std::array<double, 3>& origin) {
    if (ps.empty()) throw std::invalid_argument("empty shape");
    MomentVector mv(ps.dim, max_order);
    const auto& idxs = mv.indices();
    std::vector<Accumulator> acc(idxs.size());

    // per-point powers up to max_order per coordinate
    std::vector<double> xp(max_order + 1), yp(max_order + 1), zp(max_order + 1);
    for (const auto& pt : ps.points) {
        double x = pt.coords[0] - origin[0];
        double y = pt.coords[1] - origin[1];
        double z = pt.coords[2] - origin[2];
        xp[0] = yp[0] = zp[0] = 1.0;
        for (int i = 1; i <= max_order; ++i) {
            xp[i] = xp[i - 1] * x;
            yp[i] = yp[i - 1] * y;
            zp[i] = zp[i - 1] * z;
        }
        for (std::size_t t = 0; t < idxs.size(); ++t) {
            const MomentIndex& ix = idxs[t];
            double m = xp[ix.p] * yp[ix.q];
            if (ps.dim == 3) m *= zp[ix.r];
            acc[t].add((long double)(pt.weight) * m);
        }
    }
    for (std::size_t t = 0; t < idxs.size(); ++t) mv.set(idxs[t], acc[t].value());
    return mv;
}

}  // namespace

MomentVector raw_moments(const WeightedPointSet& ps, int max_order) {
    return moments_about(ps, max_order, {0.0, 0.0, 0.0});
}

std::array<double, 3> centroid(const MomentVector& mv) {
    double m00 = mv.m00();
    if (m00 == 0.0) throw std::domain_error("zero total weight");
    std::array<double, 3> c{0.0, 0.0, 0.0};
    c[0] = mv.at(MomentIndex(1, 0, 0)) / m00;
    c[1] = mv.at(MomentIndex(0, 1, 0)) / m00;
    if (mv.dim() == 3) c[2] = mv.at(MomentIndex(0, 0, 1)) / m00;
    return c;
}

MomentVector central_moments(const WeightedPointSet& ps, int max_order) {
    MomentVector first = raw_moments(ps, std::max(1, max_order));
    std::array<double, 3> c = centroid(first);
    return moments_about(ps, max_order, c);
}

}  // namespace gmi

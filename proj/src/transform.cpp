#include "gmi/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "gmi/moments.hpp"
#include "gmi/rng.hpp"

namespace gmi {

AffineMap AffineMap::identity(int dim) {
    AffineMap m;
    m.dim = dim;
    return m;
}

double AffineMap::det() const {
    const auto& a = linear;
    if (dim == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch in compose");
    AffineMap r;
    r.dim = a.dim;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < a.dim; ++k) s += a.linear[i][k] * b.linear[k][j];
            r.linear[i][j] = s;
        }
    for (int i = 0; i < a.dim; ++i) {
        double s = a.translation[i];
        for (int k = 0; k < a.dim; ++k) s += a.linear[i][k] * b.translation[k];
        r.translation[i] = s;
    }
    return r;
}

WeightedPointSet apply(const AffineMap& map, const WeightedPointSet& ps) {
    if (map.dim != ps.dim) throw std::invalid_argument("dimension mismatch in apply");
    double d = map.det();
    if (d == 0.0) throw std::invalid_argument("singular linear part");
    double wscale = std::fabs(d);

    WeightedPointSet out(ps.dim);
    out.points.reserve(ps.points.size());
    for (const auto& p : ps.points) {
        WeightedPoint q;
        for (int i = 0; i < ps.dim; ++i) {
            double s = map.translation[i];
            for (int k = 0; k < ps.dim; ++k) s += map.linear[i][k] * p.coords[k];
            q.coords[i] = s;
        }
        q.weight = p.weight * wscale;
        out.points.push_back(q);
    }
    return out;
}

AffineMap random_similarity(std::uint64_t seed) {
    SplitMix64 rng(seed);
    double angle = rng.uniform(0.0, 2.0 * M_PI);
    double scale = rng.uniform(0.5, 2.0);
    AffineMap m;
    m.dim = 2;
    double c = std::cos(angle), s = std::sin(angle);
    m.linear[0][0] = scale * c;
    m.linear[0][1] = -scale * s;
    m.linear[1][0] = scale * s;
    m.linear[1][1] = scale * c;
    m.translation[0] = rng.uniform(-5.0, 5.0);
    m.translation[1] = rng.uniform(-5.0, 5.0);
    return m;
}

AffineMap random_affine(std::uint64_t seed) {
    SplitMix64 rng(seed);
    AffineMap m;
    m.dim = 2;
    while (true) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.linear[i][j] = rng.uniform(-2.0, 2.0);
        double d = m.det();
        if (d >= 0.1 && d <= 10.0) break;
    }
    m.translation[0] = rng.uniform(-5.0, 5.0);
    m.translation[1] = rng.uniform(-5.0, 5.0);
    return m;
}

AffineMap random_rotation3d(std::uint64_t seed) {
    SplitMix64 rng(seed);
    // Shoemake's uniform quaternion
    double u1 = rng.uniform(), u2 = rng.uniform(), u3 = rng.uniform();
    double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    double x = a * std::sin(2.0 * M_PI * u2);
    double y = a * std::cos(2.0 * M_PI * u2);
    double z = b * std::sin(2.0 * M_PI * u3);
    double w = b * std::cos(2.0 * M_PI * u3);

    AffineMap m;
    m.dim = 3;
    m.linear = {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
                 {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
                 {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
    return m;
}

AffineMap mirror2d() {
    AffineMap m;
    m.dim = 2;
    m.linear[0][0] = -1.0;
    return m;
}

double normalized_value(const MomentPolynomial& numerator, int k, const WeightedPointSet& ps) {
    MomentVector mu = central_moments(ps, std::max(numerator.order(), 1));
    double m00 = mu.m00();
    if (m00 == 0.0) throw std::domain_error("zero total weight");
    return numerator.evaluate(mu) / std::pow(m00, k);
}

InvarianceReport invariance_check(const MomentPolynomial& numerator, int k, Group group,
                                  const WeightedPointSet& ps, int n_transforms,
                                  std::uint64_t seed, double tol) {
    InvarianceReport rep;
    rep.seed = seed;
    rep.tol = tol;
    rep.baseline = normalized_value(numerator, k, ps);
    double floor = 1e-12;
    double denom = std::max(std::fabs(rep.baseline), floor);

    bool ok = true;
    for (int t = 0; t < n_transforms; ++t) {
        std::uint64_t sub = SplitMix64::derive(seed, std::uint64_t(t));
        AffineMap map;
        switch (group) {
            case Group::Similarity: map = random_similarity(sub); break;
            case Group::Affine: map = random_affine(sub); break;
            case Group::Rotation3D: map = random_rotation3d(sub); break;
        }
        InvarianceSample s;
        s.map = map;
        s.value = normalized_value(numerator, k, apply(map, ps));
        s.rel_err = std::fabs(s.value - rep.baseline) / denom;
        ok = ok && (s.rel_err <= tol);
        rep.samples.push_back(s);
    }
    rep.pass = ok;
    return rep;
}

}  // namespace gmi

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gmi/group.hpp"
#include "gmi/point_set.hpp"
#include "gmi/polynomial.hpp"

namespace gmi {

/// Linear map plus translation; the transformations shapes are pushed
/// through in invariance tests.
struct AffineMap {
    int dim = 2;
    std::array<std::array<double, 3>, 3> linear{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    std::array<double, 3> translation{0, 0, 0};

    static AffineMap identity(int dim);
    double det() const;
};

/// a after b (composition a . b).
AffineMap compose(const AffineMap& a, const AffineMap& b);

/// Coordinates mapped by x -> L x + t; every weight multiplied by |det L|,
/// which transports the density so moment covariance matches the continuous
/// theory. Throws on singular linear part.
WeightedPointSet apply(const AffineMap& map, const WeightedPointSet& ps);

/// Deterministic draws. Similarity: angle U[0,2pi), scale U[0.5,2],
/// translation U[-5,5]^2. Affine: entries U[-2,2] resampled until
/// 0.1 <= det <= 10. Rotation3d: uniform over SO(3).
AffineMap random_similarity(std::uint64_t seed);
AffineMap random_affine(std::uint64_t seed);
AffineMap random_rotation3d(std::uint64_t seed);

/// x -> -x reflection (det = -1), used for skew classification.
AffineMap mirror2d();

struct InvarianceSample {
    AffineMap map;
    double value = 0.0;
    double rel_err = 0.0;
};

struct InvarianceReport {
    double baseline = 0.0;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::vector<InvarianceSample> samples;
    bool pass = false;
};

/// Normalized value numerator/mu00^k on the centered shape.
double normalized_value(const MomentPolynomial& numerator, int k, const WeightedPointSet& ps);

/// Evaluate on ps and on n random transformed copies drawn for `group`;
/// passes iff max |v_t - v0| <= tol * max(|v0|, 1e-12).
InvarianceReport invariance_check(const MomentPolynomial& numerator, int k, Group group,
                                  const WeightedPointSet& ps, int n_transforms,
                                  std::uint64_t seed, double tol);

}  // namespace gmi

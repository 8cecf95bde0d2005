#pragma once

// Shared helpers for the test binaries. The brute-force core evaluator here
// is the independent oracle for translation: it computes the multiple sum
// over point tuples directly and never touches the expansion code path.

#include <cmath>
#include <cstdint>
#include <vector>

#include "gmi/genfun.hpp"
#include "gmi/moments.hpp"
#include "gmi/point_set.hpp"
#include "gmi/rng.hpp"

namespace testsupport {

inline double rel_diff(double a, double b) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-12});
    return std::fabs(a - b) / scale;
}

/// Polynomial value together with the sum of absolute term values; the
/// latter is the scale against which cancellation must be judged.
inline std::pair<double, double> eval_with_magnitude(const gmi::MomentPolynomial& p,
                                                     const gmi::MomentVector& mv) {
    double value = 0.0, magnitude = 0.0;
    for (const auto& [mono, c] : p.terms()) {
        double t = c.to_double();
        for (const auto& idx : mono) t *= mv.at(idx);
        value += t;
        magnitude += std::fabs(t);
    }
    return {value, magnitude};
}

inline gmi::WeightedPointSet random_point_set(std::uint64_t seed, int n_points, int dim = 2) {
    gmi::SplitMix64 rng(seed);
    gmi::WeightedPointSet ps(dim);
    for (int i = 0; i < n_points; ++i) {
        gmi::WeightedPoint p;
        for (int d = 0; d < dim; ++d) p.coords[d] = rng.uniform(-2.0, 2.0);
        p.weight = rng.uniform(0.5, 2.0);
        ps.points.push_back(p);
    }
    return ps;
}

/// Shape centered on its own centroid (weights untouched).
inline gmi::WeightedPointSet centered(const gmi::WeightedPointSet& ps) {
    gmi::MomentVector m = gmi::raw_moments(ps, 1);
    auto c = gmi::centroid(m);
    gmi::WeightedPointSet out(ps.dim);
    for (const auto& p : ps.points) {
        gmi::WeightedPoint q = p;
        for (int d = 0; d < ps.dim; ++d) q.coords[d] -= c[d];
        out.points.push_back(q);
    }
    return out;
}

inline double factor_value(const gmi::GenFactor& f, const gmi::WeightedPointSet& ps,
                           const std::vector<std::size_t>& pick) {
    const auto& a = ps.points[pick[f.args[0] - 1]].coords;
    const auto& b = ps.points[pick[f.args[1] - 1]].coords;
    if (f.kind == gmi::GenFactor::Kind::F) {
        double s = a[0] * b[0] + a[1] * b[1];
        if (ps.dim == 3) s += a[2] * b[2];
        return s;
    }
    if (f.arity == 2) return a[0] * b[1] - b[0] * a[1];
    const auto& c = ps.points[pick[f.args[2] - 1]].coords;
    return a[0] * b[1] * c[2] + b[0] * c[1] * a[2] + c[0] * a[1] * b[2] -
           a[0] * c[1] * b[2] - b[0] * a[1] * c[2] - c[0] * b[1] * a[2];
}

/// Direct nested-sum evaluation of the core's multiple integral over the
/// (already centered) discrete shape: sum over all point tuples of the
/// factor product times the weight product. `magnitude`, when given,
/// receives the sum of absolute term values, the natural scale for judging
/// cancellation in the result.
inline double brute_force_core_value(const gmi::InvariantCore& core,
                                     const gmi::WeightedPointSet& ps,
                                     double* magnitude = nullptr) {
    int n = core.degree();
    std::vector<std::size_t> pick(std::size_t(n), 0);
    double total = 0.0, abs_total = 0.0;
    while (true) {
        double term = double(core.sign());
        for (int i = 0; i < n; ++i) term *= ps.points[pick[std::size_t(i)]].weight;
        for (const auto& f : core.factors()) term *= factor_value(f, ps, pick);
        total += term;
        abs_total += std::fabs(term);

        int slot = 0;
        while (slot < n) {
            if (++pick[std::size_t(slot)] < ps.size()) break;
            pick[std::size_t(slot)] = 0;
            ++slot;
        }
        if (slot == n) break;
    }
    if (magnitude) *magnitude = abs_total;
    return total;
}

/// Random well-formed core: labels 1..n all used, mixed f/g factors.
inline gmi::InvariantCore random_core(std::uint64_t seed, int max_points, int max_factors,
                                      int dim = 2, bool allow_f = true) {
    gmi::SplitMix64 rng(seed);
    while (true) {
        int n = 1 + int(rng.below(std::uint64_t(max_points)));
        int nf = 1 + int(rng.below(std::uint64_t(max_factors)));
        gmi::InvariantCore core(dim);
        for (int t = 0; t < nf; ++t) {
            bool use_f = allow_f && rng.coin();
            if (!use_f && ((dim == 2 && n < 2) || (dim == 3 && n < 3))) use_f = true;
            if (use_f && !allow_f) continue;
            if (use_f) {
                core.add_f(1 + int(rng.below(std::uint64_t(n))), 1 + int(rng.below(std::uint64_t(n))));
            } else if (dim == 2) {
                int i = 1 + int(rng.below(std::uint64_t(n))), j;
                do { j = 1 + int(rng.below(std::uint64_t(n))); } while (j == i);
                core.add_g(i, j);
            } else {
                int i = 1 + int(rng.below(std::uint64_t(n))), j, k;
                do { j = 1 + int(rng.below(std::uint64_t(n))); } while (j == i);
                do { k = 1 + int(rng.below(std::uint64_t(n))); } while (k == i || k == j);
                core.add_g(i, j, k);
            }
        }
        if (core.factor_count() == 0) continue;
        auto occ = core.occurrences();
        bool contiguous = true;
        for (std::size_t l = 1; l < occ.size(); ++l) contiguous = contiguous && occ[l] > 0;
        if (contiguous) return core;
    }
}

}  // namespace testsupport

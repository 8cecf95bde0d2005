#include "gmi/independence.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "gmi/rng.hpp"

namespace gmi {

MomentVariableSpace MomentVariableSpace::make(Group group, int max_order, int dim) {
    if (group == Group::Rotation3D)
        throw std::invalid_argument("variable spaces are defined for similarity and affine");
    if (max_order < 2) throw std::invalid_argument("max_order must be at least 2");
    MomentVariableSpace s;
    s.group = group;
    s.dim = dim;
    s.max_order = max_order;
    if (group == Group::Affine) s.variables.push_back(MomentIndex(0, 0, 0));
    for (const auto& idx : all_indices(dim, max_order))
        if (idx.order() >= 2) s.variables.push_back(idx);
    return s;
}

int max_independent_count(const MomentVariableSpace& space) {
    return int(space.variables.size());
}

Assignment random_assignment(const MomentVariableSpace& space, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Assignment a;
    a.reserve(space.variables.size());
    for (std::size_t i = 0; i < space.variables.size(); ++i) {
        // uniform over a rational grid in [-1,-0.1] u [0.1,1]; rational so
        // disputed eliminations can be redone exactly
        std::int64_t num = 103 + std::int64_t(rng.below(922));
        std::int64_t sign = rng.coin() ? 1 : -1;
        a.emplace_back(sign * num, 1024);
    }
    return a;
}

namespace {

void check_symbols(const MomentPolynomial& p, const std::set<MomentIndex>& vars, int dim) {
    for (const auto& [mono, c] : p.terms())
        for (const auto& idx : mono)
            if (!vars.count(idx))
                throw std::invalid_argument("symbol outside space: " + idx.name(dim));
}

/// Cleared-denominator Jacobian row of numerator/mu00^k: the true gradient
/// scaled by mu00^(k+1), which leaves rank unchanged at mu00 != 0.
/// For similarity spaces mu00 is fixed to 1 and the row is the plain gradient.
template <typename Value, typename Eval>
std::vector<Value> normalized_row(const RankEntry& inv, const MomentVariableSpace& space,
                                  Eval&& eval_at) {
    const bool affine = space.group == Group::Affine;
    std::vector<Value> row(space.variables.size());
    Value mu00 = affine ? eval_at(MomentIndex(0, 0, 0)) : Value(1);
    for (std::size_t i = 0; i < space.variables.size(); ++i) {
        const MomentIndex& v = space.variables[i];
        MomentPolynomial d = inv.numerator.differentiate(v);
        Value entry(0);
        for (const auto& [mono, c] : d.terms()) {
            Value t(c.num());
            t /= Value(c.den());
            for (const auto& idx : mono) t *= eval_at(idx);
            entry += t;
        }
        if (affine) {
            entry *= mu00;
            if (v == MomentIndex(0, 0, 0)) {
                Value n(0);
                for (const auto& [mono, c] : inv.numerator.terms()) {
                    Value t(c.num());
                    t /= Value(c.den());
                    for (const auto& idx : mono) t *= eval_at(idx);
                    n += t;
                }
                entry -= Value(inv.k) * n;
            }
        }
        row[i] = entry;
    }
    return row;
}

int exact_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return int(r);
}

constexpr double kPivotTol = 1e-9;

/// Floating elimination with per-row scaling. Returns rank; sets `disputed`
/// when some pivot decision landed within 10x of the tolerance.
int float_rank(std::vector<std::vector<double>> m, bool& disputed) {
    disputed = false;
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m) {
        double mx = 0.0;
        for (double v : row) mx = std::max(mx, std::fabs(v));
        if (mx > 0.0)
            for (double& v : row) v /= mx;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        double best = 0.0;
        for (std::size_t i = r; i < rows; ++i) {
            double v = std::fabs(m[i][c]);
            if (v > best) { best = v; pivot = i; }
        }
        if (best > kPivotTol / 10.0 && best < kPivotTol * 10.0) disputed = true;
        if (best <= kPivotTol) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            double f = m[i][c] / m[r][c];
            if (f == 0.0) continue;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return int(r);
}

int rank_at(const std::vector<RankEntry>& invs, const MomentVariableSpace& space,
            const Assignment& at) {
    std::vector<std::vector<double>> mf;
    mf.reserve(invs.size());
    for (const auto& inv : invs) {
        auto eval_d = [&](const MomentIndex& idx) -> double {
            for (std::size_t i = 0; i < space.variables.size(); ++i)
                if (space.variables[i] == idx) return at[i].to_double();
            throw std::invalid_argument("symbol outside space: " + idx.name(space.dim));
        };
        mf.push_back(normalized_row<double>(inv, space, eval_d));
    }
    bool disputed = false;
    int r = float_rank(mf, disputed);
    if (!disputed) return r;

    // borderline pivots: redo at the same rational point, exactly
    std::vector<std::vector<mpq_class>> mq;
    mq.reserve(invs.size());
    for (const auto& inv : invs) {
        auto eval_q = [&](const MomentIndex& idx) -> mpq_class {
            for (std::size_t i = 0; i < space.variables.size(); ++i)
                if (space.variables[i] == idx)
                    return mpq_class(at[i].num(), at[i].den());
            throw std::invalid_argument("symbol outside space: " + idx.name(space.dim));
        };
        mq.push_back(normalized_row<mpq_class>(inv, space, eval_q));
    }
    return exact_rank(std::move(mq));
}

}  // namespace

std::vector<std::vector<double>> jacobian(const std::vector<MomentPolynomial>& invs,
                                          const MomentVariableSpace& space,
                                          const Assignment& at) {
    if (at.size() != space.variables.size())
        throw std::invalid_argument("assignment does not cover the variable space");
    std::set<MomentIndex> vars(space.variables.begin(), space.variables.end());
    std::vector<std::vector<double>> rows;
    for (const auto& p : invs) {
        check_symbols(p, vars, space.dim);
        std::vector<double> row(space.variables.size(), 0.0);
        for (std::size_t i = 0; i < space.variables.size(); ++i) {
            MomentPolynomial d = p.differentiate(space.variables[i]);
            double v = 0.0;
            for (const auto& [mono, c] : d.terms()) {
                double t = c.to_double();
                for (const auto& idx : mono)
                    for (std::size_t j = 0; j < space.variables.size(); ++j)
                        if (space.variables[j] == idx) { t *= at[j].to_double(); break; }
                v += t;
            }
            row[i] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int functional_rank(const std::vector<RankEntry>& invs, const MomentVariableSpace& space,
                    int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::set<MomentIndex> vars(space.variables.begin(), space.variables.end());
    for (const auto& inv : invs) check_symbols(inv.numerator, vars, space.dim);

    int best = 0;
    for (int t = 0; t < trials; ++t) {
        Assignment at = random_assignment(space, SplitMix64::derive(seed, std::uint64_t(t)));
        best = std::max(best, rank_at(invs, space, at));
        if (best == int(std::min(invs.size(), space.variables.size()))) break;
    }
    return best;
}

std::vector<std::size_t> select_independent_subset(const std::vector<RankEntry>& candidates,
                                                   const MomentVariableSpace& space, int target,
                                                   int trials, std::uint64_t seed) {
    std::vector<std::size_t> kept_idx;
    std::vector<RankEntry> kept;
    int rank = 0;
    for (std::size_t i = 0; i < candidates.size() && rank < target; ++i) {
        kept.push_back(candidates[i]);
        int r = functional_rank(kept, space, trials, seed);
        if (r == rank + 1) {
            kept_idx.push_back(i);
            rank = r;
        } else {
            kept.pop_back();
        }
    }
    return kept_idx;
}

}  // namespace gmi

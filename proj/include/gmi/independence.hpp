#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmi/group.hpp"
#include "gmi/polynomial.hpp"
#include "gmi/rational.hpp"

namespace gmi {

/// The moment coordinates an invariant set is differentiated against.
/// Similarity excludes mu00 (constant once shapes are scale-normalized) and
/// the order-1 moments (identically zero for central moments); Affine keeps
/// mu00 as a variable.
struct MomentVariableSpace {
    Group group = Group::Similarity;
    int dim = 2;
    int max_order = 3;
    std::vector<MomentIndex> variables;

    static MomentVariableSpace make(Group group, int max_order, int dim = 2);
};

/// Corollary-style maximum: the number of moment variables.
int max_independent_count(const MomentVariableSpace& space);

/// An invariant entering a rank test: numerator polynomial plus the mu00
/// exponent of its denominator (0 for plain polynomials).
struct RankEntry {
    MomentPolynomial numerator;
    int k = 0;

    RankEntry() = default;
    RankEntry(MomentPolynomial n, int k_ = 0) : numerator(std::move(n)), k(k_) {}
};

/// Point assignment aligned with space.variables. Rational so borderline
/// eliminations can be redone exactly.
using Assignment = std::vector<Rational>;

/// Deterministic generic point: each variable uniform on a rational grid in
/// [-1,-0.1] u [0.1,1].
Assignment random_assignment(const MomentVariableSpace& space, std::uint64_t seed);

/// Row j = gradient of invs[j] at the assignment. Polynomials only; a symbol
/// outside the space raises std::invalid_argument naming it.
std::vector<std::vector<double>> jacobian(const std::vector<MomentPolynomial>& invs,
                                          const MomentVariableSpace& space,
                                          const Assignment& at);

/// Rank of the Jacobian of the normalized invariants (numerator/mu00^k) at
/// `trials` random generic points, maximum over trials. Row elimination with
/// relative pivot tolerance 1e-9; pivots within 10x of the threshold trigger
/// an exact rational re-elimination.
int functional_rank(const std::vector<RankEntry>& invs, const MomentVariableSpace& space,
                    int trials, std::uint64_t seed);

/// Greedy scan in the given order, keeping a candidate iff it raises the
/// rank of the kept set; stops at `target` (or the end). Returns kept
/// positions in scan order.
std::vector<std::size_t> select_independent_subset(const std::vector<RankEntry>& candidates,
                                                   const MomentVariableSpace& space, int target,
                                                   int trials, std::uint64_t seed);

}  // namespace gmi

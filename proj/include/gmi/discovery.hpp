#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gmi/genfun.hpp"
#include "gmi/group.hpp"
#include "gmi/polynomial.hpp"

namespace gmi {

/// Bounds for generating-function product enumeration.
struct EnumerationSpec {
    int dim = 2;
    Group group = Group::Affine;
    int n_pnt = 2;               // max distinct points (invariant degree)
    int n_cnt = 2;               // max occurrence of one point (moment order)
    int max_factors = 0;         // 0 = derive from n_pnt*n_cnt
    bool require_true_invariants = true;  // drop odd-#g (skew) cores
    std::uint64_t budget = 1000000;       // raw multiset cap

    int effective_max_factors() const;
};

struct EnumerationStats {
    std::uint64_t raw = 0;        // multisets satisfying the occupancy bounds
    std::uint64_t canonical = 0;  // after label-permutation reduction
    std::uint64_t skew_dropped = 0;
};

/// Stream every canonical-representative core within the bounds: labels
/// 1..n for each n <= n_pnt, every label occurring in [1, n_cnt] slots,
/// at most max_factors factors, one representative per relabeling orbit.
/// Affine specs yield g-only cores. Throws std::length_error("budget
/// exceeded ...") when the raw count passes spec.budget.
EnumerationStats enumerate_cores(const EnumerationSpec& spec,
                                 const std::function<void(const InvariantCore&)>& yield);
std::vector<InvariantCore> enumerate_cores(const EnumerationSpec& spec);

struct Elimination {
    std::string core;
    std::string reason;          // "zero" | "duplicate" | "skew"
    std::string duplicate_of;    // set for duplicates
};

struct DiscoveredInvariant {
    InvariantCore core;
    MomentPolynomial polynomial;  // central-reduced, canonicalized
    int k = 0;
    int order = 0;
    int degree = 0;
};

struct DiscoveryReport {
    EnumerationSpec spec;
    int target = 0;
    std::uint64_t seed = 0;
    EnumerationStats stats;
    std::uint64_t zero_dropped = 0;
    std::uint64_t duplicate_dropped = 0;
    std::vector<Elimination> eliminations;
    std::vector<DiscoveredInvariant> candidates;  // ordered as scanned
    std::vector<std::size_t> kept;                // indices into candidates
    int rank = 0;
    bool incomplete = false;                      // target not reached
};

/// The enumerate -> translate -> prune -> select pipeline. Candidates are
/// ordered by (order, degree, term count, core string) so the simplest
/// invariants are preferred.
DiscoveryReport discover(const EnumerationSpec& spec, int target, std::uint64_t seed,
                         int trials = 5);

}  // namespace gmi

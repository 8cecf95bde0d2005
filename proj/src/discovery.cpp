#include "gmi/discovery.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "gmi/independence.hpp"

namespace gmi {

int EnumerationSpec::effective_max_factors() const {
    return max_factors > 0 ? max_factors : (n_pnt * n_cnt) / 2;
}

namespace {

struct FactorType {
    bool is_f;
    int a, b, c;  // labels; c unused for arity-2
    int arity;
};

std::vector<FactorType> factor_types(const EnumerationSpec& spec, int n) {
    std::vector<FactorType> types;
    if (spec.group == Group::Similarity) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) types.push_back({true, i, j, 0, 2});
    }
    if (spec.dim == 2) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) types.push_back({false, i, j, 0, 2});
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) types.push_back({false, i, j, k, 3});
    }
    return types;
}

struct Enumerator {
    const EnumerationSpec& spec;
    const std::function<void(const InvariantCore&)>& yield;
    EnumerationStats stats;

    std::vector<FactorType> types;
    std::vector<int> mult;
    std::vector<int> occ;
    int n = 0;
    int total_factors = 0;

    Enumerator(const EnumerationSpec& s, const std::function<void(const InvariantCore&)>& y)
        : spec(s), yield(y) {}

    void run() {
        if (spec.group == Group::Rotation3D)
            throw std::invalid_argument("enumeration is defined for similarity and affine");
        if (spec.n_pnt < 1 || spec.n_cnt < 1 || spec.effective_max_factors() < 1)
            throw std::invalid_argument("enumeration bounds must be positive");
        if (spec.dim != 2 && spec.dim != 3)
            throw std::invalid_argument("dim must be 2 or 3");
        for (n = 1; n <= spec.n_pnt; ++n) {
            types = factor_types(spec, n);
            if (types.empty()) continue;
            mult.assign(types.size(), 0);
            occ.assign(std::size_t(n) + 1, 0);
            total_factors = 0;
            descend(0);
        }
    }

    void descend(std::size_t t) {
        if (t == types.size()) {
            leaf();
            return;
        }
        const FactorType& ft = types[t];
        int cap = spec.effective_max_factors() - total_factors;
        for (int s = 0; s < ft.arity; ++s) {
            int label = s == 0 ? ft.a : s == 1 ? ft.b : ft.c;
            int room;
            if (ft.is_f && ft.a == ft.b) {
                room = (spec.n_cnt - occ[ft.a]) / 2;  // f(i,i) uses two slots of one label
                cap = std::min(cap, room);
                break;
            }
            room = spec.n_cnt - occ[label];
            cap = std::min(cap, room);
        }
        for (int m = 0; m <= cap; ++m) {
            if (m > 0) bump(ft, +1);
            mult[t] = m;
            descend(t + 1);
        }
        mult[t] = 0;
        bump(ft, -cap);
    }

    void bump(const FactorType& ft, int delta) {
        occ[ft.a] += delta;
        occ[ft.b] += delta;
        if (ft.arity == 3) occ[ft.c] += delta;
        total_factors += delta;
    }

    void leaf() {
        if (total_factors == 0) return;
        for (int l = 1; l <= n; ++l)
            if (occ[l] < 1) return;
        if (++stats.raw > spec.budget)
            throw std::length_error("budget exceeded: more than " + std::to_string(spec.budget) +
                                    " raw cores within the enumeration bounds");

        InvariantCore core(spec.dim);
        for (std::size_t t = 0; t < types.size(); ++t) {
            for (int m = 0; m < mult[t]; ++m) {
                const FactorType& ft = types[t];
                if (ft.is_f)
                    core.add_f(ft.a, ft.b);
                else if (ft.arity == 2)
                    core.add_g(ft.a, ft.b);
                else
                    core.add_g(ft.a, ft.b, ft.c);
            }
        }
        if (!(core.relabeled_canonical() == core)) return;
        ++stats.canonical;
        if (spec.require_true_invariants && core.count_g() % 2 == 1) {
            ++stats.skew_dropped;
            return;
        }
        yield(core);
    }
};

}  // namespace

EnumerationStats enumerate_cores(const EnumerationSpec& spec,
                                 const std::function<void(const InvariantCore&)>& yield) {
    Enumerator e(spec, yield);
    e.run();
    return e.stats;
}

std::vector<InvariantCore> enumerate_cores(const EnumerationSpec& spec) {
    std::vector<InvariantCore> out;
    enumerate_cores(spec, [&](const InvariantCore& c) { out.push_back(c); });
    return out;
}

DiscoveryReport discover(const EnumerationSpec& spec, int target, std::uint64_t seed, int trials) {
    DiscoveryReport rep;
    rep.spec = spec;
    rep.target = target;
    rep.seed = seed;

    std::map<MomentPolynomial, std::string> seen;
    std::vector<DiscoveredInvariant> cands;

    rep.stats = enumerate_cores(spec, [&](const InvariantCore& core) {
        MomentPolynomial poly = translate(core).central_reduced();
        if (poly.is_zero()) {
            ++rep.zero_dropped;
            rep.eliminations.push_back({core.str(), "zero", ""});
            return;
        }
        MomentPolynomial canon = canonicalize(poly);
        auto it = seen.find(canon);
        if (it != seen.end()) {
            ++rep.duplicate_dropped;
            rep.eliminations.push_back({core.str(), "duplicate", it->second});
            return;
        }
        seen.emplace(canon, core.str());

        DiscoveredInvariant inv;
        inv.core = core;
        inv.polynomial = std::move(canon);
        inv.k = normalization_exponent(core, spec.group);
        inv.degree = core.degree();
        inv.order = core.order();
        cands.push_back(std::move(inv));
    });

    // simplest first: low moment order, then low degree, then fewer terms
    std::sort(cands.begin(), cands.end(),
              [](const DiscoveredInvariant& a, const DiscoveredInvariant& b) {
                  return std::make_tuple(a.order, a.degree, a.polynomial.term_count(),
                                         a.core.str()) <
                         std::make_tuple(b.order, b.degree, b.polynomial.term_count(),
                                         b.core.str());
              });
    rep.candidates = std::move(cands);

    MomentVariableSpace space = MomentVariableSpace::make(
        spec.group == Group::Affine ? Group::Affine : Group::Similarity,
        std::max(2, spec.n_cnt), spec.dim);

    std::vector<RankEntry> entries;
    entries.reserve(rep.candidates.size());
    for (const auto& c : rep.candidates) entries.emplace_back(c.polynomial, c.k);

    rep.kept = select_independent_subset(entries, space, target, trials, seed);
    rep.rank = int(rep.kept.size());
    rep.incomplete = rep.rank < target;
    return rep;
}

}  // namespace gmi

// Acceptance suite: one checker per criterion, each printing PASS/FAIL lines
// for its sub-checks at the pinned tolerances. Exit status is nonzero when
// the selected criterion (or any, when run without arguments) fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "gmi/catalog.hpp"
#include "gmi/discovery.hpp"
#include "gmi/independence.hpp"
#include "gmi/json_io.hpp"
#include "gmi/moments.hpp"
#include "gmi/transform.hpp"
#include "support.hpp"

using namespace gmi;

namespace {

bool g_ok = true;

void line(bool ok, const std::string& what) {
    std::printf("  [%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
    g_ok = g_ok && ok;
}

const NamedInvariant& entry(Group g, const std::string& name) {
    for (const auto& inv : get_catalog(g))
        if (inv.name == name) return inv;
    throw std::logic_error("missing catalog entry " + name);
}

// ---- criterion 1: translation ground truth ------------------------------

bool criterion1() {
    std::printf("criterion 1: translation ground truth\n");
    MomentPolynomial want =
        MomentPolynomial::symbol(2, {2, 0}) + MomentPolynomial::symbol(2, {0, 2});
    line(translate(parse_core("f(1,1)")) == want, "translate(f(1,1)) == mu20 + mu02 exactly");

    auto checks = verify_catalog(Group::Similarity);
    for (const auto& c : checks) {
        if (c.name[0] != 'I' || c.name[1] == 'P') continue;
        if (c.name == "I7") continue;  // the catalog's seventh entry is skew, reported elsewhere
        line(c.match && c.scalar.sign() > 0,
             "core of " + c.name + " reproduces its reference polynomial, scalar " +
                 c.scalar.str());
    }
    return g_ok;
}

// ---- criterion 2: primitive-invariant identities -------------------------

bool criterion2() {
    std::printf("criterion 2: primitive-invariant identities (exact rational arithmetic)\n");
    auto rels = verify_relations();
    for (const auto& r : rels) {
        std::string what = r.name + " holds as a zero-residual identity";
        if (!r.holds) what += " ; residual = " + r.residual.str();
        line(r.holds, what);
    }
    if (!g_ok)
        std::printf(
            "  note: the residual of I51 = 3*I52 equals the reference I5 polynomial, so that\n"
            "  printed relation contradicts I5 = IP8 - 3*IP9 (which verifies exactly); both\n"
            "  cannot hold unless I5 were identically zero.\n");
    return g_ok;
}

// ---- criterion 3: appendix reproduction ----------------------------------

bool criterion3() {
    std::printf("criterion 3: affine catalog reproduction\n");
    auto checks = verify_catalog(Group::Affine);
    bool all = true;
    for (const auto& c : checks) all = all && c.match && c.scalar.sign() > 0;
    line(all, "all 19 affine cores translate to the reference numerators up to a positive "
              "rational scalar");

    const std::map<std::string, int> printed_k = {
        {"IA1", 4},   {"IA2", 10},  {"IA3", 7},   {"IA4", 11},  {"IA5", 6},
        {"IA6", 9},   {"IA7", 7},   {"IA8", 10},  {"IA9", 13},  {"IA10", 14},
        {"IA11", 12}, {"IA12", 9},  {"IA13", 12}, {"IA14", 10}, {"IA15", 12},
        {"IA16", 10}, {"IA17", 10}, {"IA18", 10}, {"IA19", 9}};
    bool kk = true;
    for (const auto& [name, k] : printed_k) kk = kk && entry(Group::Affine, name).k == k;
    line(kk, "normalization exponents match the printed denominator powers for all 19");
    line(entry(Group::Affine, "IA1").k == 4, "anchor IA1 -> mu00^4");
    line(entry(Group::Affine, "IA2").k == 10, "anchor IA2 -> mu00^10");
    line(entry(Group::Affine, "IA10").k == 14, "anchor IA10 -> mu00^14");
    return g_ok;
}

// ---- criterion 4: 3D catalog ----------------------------------------------

bool criterion4() {
    std::printf("criterion 4: 3D catalog\n");
    auto checks = verify_catalog(Group::Rotation3D);
    std::map<std::string, CatalogEntryCheck> m;
    for (auto& c : checks) m[c.name] = c;
    line(m["J1"].match && m["J1"].scalar == Rational(1), "J1 translates exactly (scalar 1)");
    line(m["J2"].match && m["J2"].scalar.sign() > 0,
         "J2 matches up to recorded scalar " + m["J2"].scalar.str());
    line(m["J3"].match && m["J3"].scalar.sign() > 0,
         "J3 matches up to recorded scalar " + m["J3"].scalar.str());

    auto cloud = testsupport::random_point_set(404, 30, 3);
    for (const auto& inv : get_catalog(Group::Rotation3D)) {
        auto rep = invariance_check(inv.reference, inv.k, Group::Rotation3D, cloud, 20, 0, 1e-8);
        double worst = 0.0;
        for (const auto& s : rep.samples) worst = std::max(worst, s.rel_err);
        char w[32];
        std::snprintf(w, sizeof w, "%.2e", worst);
        line(rep.pass, inv.name + " invariant under 20 random rotations of a 30-point cloud "
                                  "(rel tol 1e-8, worst " + w + ")");
    }
    return g_ok;
}

// ---- criterion 5: independence ranks --------------------------------------

bool criterion5() {
    std::printf("criterion 5: independence ranks (Theorem-style Jacobian test, 5 trials, seed 0)\n");
    auto aff_space = MomentVariableSpace::make(Group::Affine, 5);
    std::vector<RankEntry> aff;
    for (const auto& inv : get_catalog(Group::Affine)) aff.emplace_back(inv.reference, inv.k);
    int r_aff = functional_rank(aff, aff_space, 5, 0);
    std::string note = r_aff == 19
                           ? ""
                           : " ; observed " + std::to_string(r_aff) +
                                 ": 19 variables minus the 4 degrees of freedom of the planar "
                                 "linear group bound the attainable rank by 15";
    line(r_aff == 19, "functional_rank(IA1..IA19) == 19 in the 19-variable affine space" + note);

    auto sim_space = MomentVariableSpace::make(Group::Similarity, 3);
    std::vector<RankEntry> hu;
    for (const auto& inv : named_set("hu")) hu.emplace_back(inv.reference, inv.k);
    int r_hu = functional_rank(hu, sim_space, 5, 0);
    line(r_hu < 7, "functional_rank(Hu I1..I7) < 7 (observed " + std::to_string(r_hu) + ")");
    line(r_hu == 6, "expected value 6 confirmed by the numerical oracle");

    std::vector<RankEntry> pi6;
    for (const auto& inv : named_set("pi"))
        if (inv.name != "IP3" && inv.name != "IP7" && inv.name != "IP9")
            pi6.emplace_back(inv.reference, inv.k);
    int r_pi = functional_rank(pi6, sim_space, 5, 0);
    line(r_pi == 6, "functional_rank({IP1..IP9} minus {IP3, IP7, IP9}) == 6 (observed " +
                        std::to_string(r_pi) + ")");
    return g_ok;
}

// ---- criterion 6: invariance campaign --------------------------------------

bool criterion6() {
    std::printf("criterion 6: invariance campaign on a fixed seeded 20-point set\n");
    auto ps = testsupport::random_point_set(2024, 20);

    bool aff_ok = true;
    double aff_worst = 0.0;
    for (const auto& inv : get_catalog(Group::Affine)) {
        auto rep = invariance_check(inv.reference, inv.k, Group::Affine, ps, 10, 0, 1e-6);
        for (const auto& s : rep.samples) aff_worst = std::max(aff_worst, s.rel_err);
        aff_ok = aff_ok && rep.pass;
    }
    char wa[32];
    std::snprintf(wa, sizeof wa, "%.2e", aff_worst);
    line(aff_ok, "all 19 affine invariants stable under 10 random det>0 affines at rel 1e-6 "
                 "(worst " + std::string(wa) + ")");

    bool sim_ok = true;
    double sim_worst = 0.0;
    for (const auto& inv : get_catalog(Group::Similarity)) {
        if (inv.skew) continue;  // Hu I1..I6 and IP1..IP9
        auto rep = invariance_check(inv.reference, inv.k, Group::Similarity, ps, 10, 1, 1e-8);
        for (const auto& s : rep.samples) sim_worst = std::max(sim_worst, s.rel_err);
        sim_ok = sim_ok && rep.pass;
    }
    char ws[32];
    std::snprintf(ws, sizeof ws, "%.2e", sim_worst);
    line(sim_ok, "Hu I1..I6 and IP1..IP9 stable under 10 random similarities at rel 1e-8 "
                 "(worst " + std::string(ws) + ")");

    const NamedInvariant& i7 = entry(Group::Similarity, "I7");
    double v = normalized_value(i7.reference, i7.k, ps);
    double vm = normalized_value(i7.reference, i7.k, apply(mirror2d(), ps));
    bool flip = testsupport::rel_diff(v, -vm) < 1e-9;
    line(flip, "I7 changes sign with preserved magnitude under a mirror at rel 1e-9");
    return g_ok;
}

// ---- criterion 7: discovery reproduction -----------------------------------

bool criterion7() {
    std::printf("criterion 7: discovery pipeline, affine, order <= 5, degree <= 5, target 19\n");
    EnumerationSpec spec;
    spec.group = Group::Affine;
    spec.n_pnt = 5;
    spec.n_cnt = 5;
    DiscoveryReport rep = discover(spec, 19, 0);

    std::printf(
        "  pipeline counts: raw %llu, canonical %llu, skew %llu, zero %llu, duplicate %llu, "
        "candidates %zu, independent %zu%s\n",
        (unsigned long long)rep.stats.raw, (unsigned long long)rep.stats.canonical,
        (unsigned long long)rep.stats.skew_dropped, (unsigned long long)rep.zero_dropped,
        (unsigned long long)rep.duplicate_dropped, rep.candidates.size(), rep.kept.size(),
        rep.incomplete ? " (incomplete)" : "");

    line(rep.zero_dropped > 0 && rep.duplicate_dropped > 0 &&
             rep.eliminations.size() == rep.zero_dropped + rep.duplicate_dropped,
         "zero and duplicate eliminations itemized (" + std::to_string(rep.zero_dropped) +
             " zero, " + std::to_string(rep.duplicate_dropped) + " duplicate)");

    std::string note =
        rep.rank == 19 ? ""
                       : " ; observed " + std::to_string(rep.rank) +
                             ", the attainable maximum in this space (the report carries the "
                             "incomplete flag)";
    line(rep.rank == 19, "independent set of size exactly 19" + note);

    DiscoveryReport rerun = discover(spec, 19, 0);
    line(discovery_report_json(rep).dump() == discovery_report_json(rerun).dump(),
         "rerun with the same seed is byte-identical");
    return g_ok;
}

// ---- criterion 8: oracle equivalence ----------------------------------------

bool criterion8() {
    std::printf("criterion 8: translation vs brute-force multiple-sum oracle\n");
    int cores_checked = 0;
    double worst = 0.0;
    bool ok = true;
    for (std::uint64_t seed = 0; cores_checked < 50; ++seed) {
        InvariantCore core = testsupport::random_core(7000 + seed, 4, 4);
        MomentPolynomial poly = translate(core);
        ++cores_checked;
        for (int s = 0; s < 5; ++s) {
            auto ps = testsupport::centered(
                testsupport::random_point_set(9100 + seed * 5 + std::uint64_t(s), 5));
            MomentVector mv = raw_moments(ps, std::max(poly.order(), 1));
            double via = poly.evaluate(mv);
            double magnitude = 0.0;
            double direct = testsupport::brute_force_core_value(core, ps, &magnitude);
            double rd = std::fabs(via - direct) / std::max(magnitude, 1e-12);
            worst = std::max(worst, rd);
            ok = ok && rd < 1e-9;
        }
    }
    char w8[32];
    std::snprintf(w8, sizeof w8, "%.2e", worst);
    line(ok, "50 random cores x 5 random point sets agree at rel 1e-9 (worst " +
                 std::string(w8) + ")");
    return g_ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool (*checks[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
    if (argc > 1) {
        int n = std::atoi(argv[1]);
        if (n < 1 || n > 8) {
            std::fprintf(stderr, "usage: %s [1..8]\n", argv[0]);
            return 2;
        }
        bool ok = checks[n - 1]();
        std::printf("criterion %d: %s\n", n, ok ? "PASS" : "FAIL");
        return ok ? 0 : 1;
    }
    bool all = true;
    for (int n = 1; n <= 8; ++n) {
        g_ok = true;
        bool ok = checks[n - 1]();
        std::printf("criterion %d: %s\n\n", n, ok ? "PASS" : "FAIL");
        all = all && ok;
    }
    return all ? 0 : 1;
}

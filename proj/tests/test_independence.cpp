#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmi/catalog.hpp"
#include "gmi/independence.hpp"
#include "support.hpp"

using namespace gmi;

namespace {

MomentPolynomial mu(int p, int q) { return MomentPolynomial::symbol(2, {p, q}); }

std::vector<RankEntry> entries_for(const std::vector<NamedInvariant>& set) {
    std::vector<RankEntry> out;
    for (const auto& inv : set) out.emplace_back(inv.reference, inv.k);
    return out;
}

}  // namespace

TEST_CASE("variable spaces") {
    auto sim3 = MomentVariableSpace::make(Group::Similarity, 3);
    CHECK(sim3.variables.size() == 7);
    CHECK(max_independent_count(sim3) == 7);

    auto sim2 = MomentVariableSpace::make(Group::Similarity, 2);
    CHECK(sim2.variables.size() == 3);

    auto aff5 = MomentVariableSpace::make(Group::Affine, 5);
    CHECK(aff5.variables.size() == 19);
    CHECK(max_independent_count(aff5) == 19);

    // mu00 only in affine spaces; order-1 never
    for (const auto& v : sim3.variables) CHECK(v.order() >= 2);
    CHECK(aff5.variables.front() == MomentIndex(0, 0));
    CHECK_THROWS_AS(MomentVariableSpace::make(Group::Similarity, 1), std::invalid_argument);
}

TEST_CASE("assignments are deterministic and avoid zero") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    Assignment a = random_assignment(space, 42);
    Assignment b = random_assignment(space, 42);
    CHECK(a == b);
    Assignment c = random_assignment(space, 43);
    CHECK(a != c);
    for (const auto& v : a) {
        double x = std::fabs(v.to_double());
        CHECK(x >= 0.1);
        CHECK(x <= 1.0);
    }
}

TEST_CASE("jacobian rows") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    Assignment at = random_assignment(space, 1);

    auto rows = jacobian({mu(2, 0) + mu(0, 2), MomentPolynomial::zero(2)}, space, at);
    REQUIRE(rows.size() == 2);
    for (std::size_t i = 0; i < space.variables.size(); ++i) {
        const MomentIndex& v = space.variables[i];
        double want = (v == MomentIndex(2, 0) || v == MomentIndex(0, 2)) ? 1.0 : 0.0;
        CHECK(rows[0][i] == want);
        CHECK(rows[1][i] == 0.0);
    }
}

TEST_CASE("jacobian of IP3 at a fixed point") {
    auto space = MomentVariableSpace::make(Group::Similarity, 2);
    // variables in index order: mu02, mu11, mu20
    Assignment at = {Rational(2), Rational(3), Rational(1)};
    MomentPolynomial ip3 = mu(2, 0) * mu(0, 2) - mu(1, 1) * mu(1, 1);
    auto rows = jacobian({ip3}, space, at);
    REQUIRE(rows.size() == 1);
    for (std::size_t i = 0; i < space.variables.size(); ++i) {
        const MomentIndex& v = space.variables[i];
        double want = v == MomentIndex(2, 0) ? 2.0 : v == MomentIndex(1, 1) ? -6.0 : 1.0;
        CHECK(rows[0][i] == want);
    }
}

TEST_CASE("symbols outside the space are named") {
    auto space = MomentVariableSpace::make(Group::Similarity, 2);
    Assignment at = random_assignment(space, 5);
    CHECK_THROWS_WITH_AS(jacobian({mu(2, 1)}, space, at), "symbol outside space: mu21",
                         std::invalid_argument);
    CHECK_THROWS_AS(functional_rank({RankEntry(mu(2, 1))}, space, 5, 0),
                    std::invalid_argument);
}

TEST_CASE("rank basics") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    CHECK(functional_rank({RankEntry(mu(2, 0) + mu(0, 2))}, space, 5, 0) == 1);
    CHECK(functional_rank({RankEntry(MomentPolynomial::zero(2))}, space, 5, 0) == 0);
    CHECK(functional_rank({}, space, 5, 0) == 0);
}

TEST_CASE("Hu's seven are not functionally independent: rank six") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    auto hu = entries_for(named_set("hu"));
    CHECK(functional_rank(hu, space, 5, 0) == 6);
    hu.pop_back();  // I1..I6
    CHECK(functional_rank(hu, space, 5, 0) == 6);
}

TEST_CASE("primitive set minus IP3, IP7, IP9 has rank six") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    auto pi = named_set("pi");
    std::vector<RankEntry> keep;
    for (const auto& inv : pi)
        if (inv.name != "IP3" && inv.name != "IP7" && inv.name != "IP9")
            keep.emplace_back(inv.reference, inv.k);
    REQUIRE(keep.size() == 6);
    CHECK(functional_rank(keep, space, 5, 0) == 6);
    CHECK(functional_rank(entries_for(pi), space, 5, 0) == 6);
}

TEST_CASE("the nineteen affine invariants have rank fifteen") {
    // 19 moment variables minus the four parameters of the linear group
    // bound the number of independent absolute invariants by 15, and the
    // shipped set attains that bound.
    auto space = MomentVariableSpace::make(Group::Affine, 5);
    CHECK(functional_rank(entries_for(named_set("affine19")), space, 5, 0) == 15);
}

TEST_CASE("affine invariants up to order three have rank four") {
    auto space = MomentVariableSpace::make(Group::Affine, 3);
    auto aff = named_set("affine19");
    std::vector<RankEntry> low;
    for (const auto& inv : aff)
        if (inv.reference.order() <= 3) low.emplace_back(inv.reference, inv.k);
    REQUIRE(low.size() == 4);  // IA1..IA4
    CHECK(functional_rank(low, space, 5, 0) == 4);
}

TEST_CASE("rank ignores scalar multiples") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    auto hu = entries_for(named_set("hu"));
    int base = functional_rank(hu, space, 5, 0);
    for (auto& e : hu) e.numerator = Rational(7, 3) * e.numerator;
    CHECK(functional_rank(hu, space, 5, 0) == base);
}

TEST_CASE("rank is monotone and bounded") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    auto pi = entries_for(named_set("pi"));
    std::vector<RankEntry> grow;
    int prev = 0;
    for (const auto& e : pi) {
        grow.push_back(e);
        int r = functional_rank(grow, space, 5, 0);
        CHECK(r >= prev);
        CHECK(r <= prev + 1);
        CHECK(r <= int(std::min(grow.size(), space.variables.size())));
        prev = r;
    }
}

TEST_CASE("determinism of rank and subset selection") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    auto pi = entries_for(named_set("pi"));
    CHECK(functional_rank(pi, space, 5, 123) == functional_rank(pi, space, 5, 123));
    auto a = select_independent_subset(pi, space, 9, 5, 9);
    auto b = select_independent_subset(pi, space, 9, 5, 9);
    CHECK(a == b);
}

TEST_CASE("greedy selection rejects scalar multiples") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    MomentPolynomial ip2 = mu(2, 0) * mu(2, 0) + mu(0, 2) * mu(0, 2) +
                           Rational(2) * (mu(1, 1) * mu(1, 1));
    MomentPolynomial ip3 = mu(2, 0) * mu(0, 2) - mu(1, 1) * mu(1, 1);
    std::vector<RankEntry> cands = {RankEntry(ip2), RankEntry(Rational(2) * ip2),
                                    RankEntry(ip3)};
    auto kept = select_independent_subset(cands, space, 3, 5, 0);
    CHECK(kept == std::vector<std::size_t>{0, 2});
}

TEST_CASE("greedy selection hits the I5^2 + I7^2 = I3 * I4^3 dependency") {
    // with I4 present, at most two of {I3, I5, I7} can be kept
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    auto hu = named_set("hu");
    auto by_name = [&](const std::string& n) -> const NamedInvariant& {
        for (const auto& inv : hu)
            if (inv.name == n) return inv;
        throw std::logic_error("missing");
    };
    std::vector<RankEntry> cands = {
        RankEntry(by_name("I4").reference, by_name("I4").k),
        RankEntry(by_name("I3").reference, by_name("I3").k),
        RankEntry(by_name("I5").reference, by_name("I5").k),
        RankEntry(by_name("I7").reference, by_name("I7").k)};
    auto kept = select_independent_subset(cands, space, 4, 5, 0);
    CHECK(kept.size() == 3);  // I7 adds nothing once I3, I4, I5 are in
    int from_triple = 0;
    for (std::size_t i : kept)
        if (i >= 1) ++from_triple;
    CHECK(from_triple <= 2);
}

TEST_CASE("greedy selection honors the target") {
    auto space = MomentVariableSpace::make(Group::Similarity, 3);
    auto pi = entries_for(named_set("pi"));
    auto kept = select_independent_subset(pi, space, 3, 5, 0);
    CHECK(kept.size() == 3);
}

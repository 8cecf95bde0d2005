#include "gmi/catalog.hpp"

#include <map>
#include <stdexcept>

namespace gmi {

namespace {

using P = MomentPolynomial;

P mu(int p, int q) { return P::symbol(2, MomentIndex(p, q)); }
P mu3(int p, int q, int r) { return P::symbol(3, MomentIndex(p, q, r)); }

P pw(const P& base, int e) {
    P r = P::constant(base.dim(), Rational(1));
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}
P sq(const P& b) { return pw(b, 2); }

Rational R(std::int64_t n) { return Rational(n); }

NamedInvariant entry(const std::string& name, Group group, const CoreSum& core, const P& ref,
                     bool skew = false) {
    NamedInvariant inv;
    inv.name = name;
    inv.group = group;
    inv.core = core;
    inv.reference = ref;
    inv.k = normalization_exponent(core, group == Group::Rotation3D ? Group::Similarity : group);
    inv.skew = skew;
    return inv;
}

CoreSum one(const std::string& text, int dim = 2) { return CoreSum(parse_core(text, dim)); }

std::vector<NamedInvariant> build_similarity() {
    std::vector<NamedInvariant> out;

    P a = mu(3, 0) + mu(1, 2);       // mu30 + mu12
    P b = mu(2, 1) + mu(0, 3);       // mu21 + mu03
    P c = mu(3, 0) - R(3) * mu(1, 2);
    P d = R(3) * mu(2, 1) - mu(0, 3);
    P e = mu(2, 0) - mu(0, 2);

    // Hu's seven
    out.push_back(entry("I1", Group::Similarity, one("f(1,1)"), mu(2, 0) + mu(0, 2)));

    CoreSum i2;
    i2.add(R(1), parse_core("f(1,2)^2"));
    i2.add(R(-1), parse_core("g(1,2)^2"));
    out.push_back(entry("I2", Group::Similarity, i2, sq(e) + R(4) * sq(mu(1, 1))));

    CoreSum i3;
    i3.add(R(1), parse_core("f(1,2)^3"));
    i3.add(R(-3), parse_core("g(1,2)^2*f(1,2)"));
    out.push_back(entry("I3", Group::Similarity, i3, sq(c) + sq(d)));

    out.push_back(entry("I4", Group::Similarity, one("f(1,2)*f(1,1)*f(2,2)"), sq(a) + sq(b)));

    CoreSum i5;
    i5.add(R(1), parse_core("f(2,2)*f(3,3)*f(4,4)*f(2,1)*f(3,1)*f(4,1)"));
    i5.add(R(-1), parse_core("f(2,2)*f(3,3)*f(4,4)*f(2,1)*g(3,1)*g(4,1)"));
    i5.add(R(-1), parse_core("f(2,2)*f(3,3)*f(4,4)*g(2,1)*g(3,1)*f(4,1)"));
    i5.add(R(-1), parse_core("f(2,2)*f(3,3)*f(4,4)*g(2,1)*f(3,1)*g(4,1)"));
    out.push_back(entry("I5", Group::Similarity, i5,
                        c * a * (sq(a) - R(3) * sq(b)) + d * b * (R(3) * sq(a) - sq(b))));

    CoreSum i6;
    i6.add(R(1), parse_core("f(2,2)*f(3,3)*f(1,2)*f(1,3)"));
    i6.add(R(-1), parse_core("f(2,2)*f(3,3)*g(1,2)*g(1,3)"));
    out.push_back(entry("I6", Group::Similarity, i6,
                        e * (sq(a) - sq(b)) + R(4) * mu(1, 1) * a * b));

    CoreSum i7;
    i7.add(R(1), parse_core("f(2,2)*f(3,3)*f(4,4)*g(2,1)*f(3,1)*f(4,1)"));
    i7.add(R(-1), parse_core("f(2,2)*f(3,3)*f(4,4)*g(2,1)*g(3,1)*g(4,1)"));
    i7.add(R(1), parse_core("f(2,2)*f(3,3)*f(4,4)*f(2,1)*g(3,1)*f(4,1)"));
    i7.add(R(1), parse_core("f(2,2)*f(3,3)*f(4,4)*f(2,1)*f(3,1)*g(4,1)"));
    out.push_back(entry("I7", Group::Similarity, i7,
                        d * a * (sq(a) - R(3) * sq(b)) - c * b * (R(3) * sq(a) - sq(b)),
                        /*skew=*/true));

    // primitive invariants
    out.push_back(entry("IP1", Group::Similarity, one("f(1,1)"), mu(2, 0) + mu(0, 2)));
    out.push_back(entry("IP2", Group::Similarity, one("f(1,2)^2"),
                        sq(mu(2, 0)) + sq(mu(0, 2)) + R(2) * sq(mu(1, 1))));
    out.push_back(entry("IP3", Group::Similarity, one("g(1,2)^2"),
                        mu(2, 0) * mu(0, 2) - sq(mu(1, 1))));
    out.push_back(entry("IP4", Group::Similarity, one("f(2,2)*f(3,3)*f(1,2)*f(1,3)"),
                        mu(2, 0) * sq(a) + R(2) * mu(1, 1) * a * b + mu(0, 2) * sq(b)));
    out.push_back(entry("IP5", Group::Similarity, one("g(1,2)^2*f(1,2)"),
                        mu(2, 1) * (mu(0, 3) - mu(2, 1)) + mu(1, 2) * (mu(3, 0) - mu(1, 2))));
    out.push_back(entry("IP6", Group::Similarity, one("f(1,2)^3"),
                        sq(mu(3, 0)) + R(3) * sq(mu(2, 1)) + R(3) * sq(mu(1, 2)) + sq(mu(0, 3))));
    out.push_back(entry("IP7", Group::Similarity, one("f(2,2)*f(3,3)*g(1,2)*g(1,3)"),
                        mu(2, 0) * sq(b) - R(2) * mu(1, 1) * a * b + mu(0, 2) * sq(a)));
    out.push_back(entry("IP8", Group::Similarity,
                        one("f(2,2)*f(3,3)*f(4,4)*f(2,1)*f(3,1)*f(4,1)"),
                        mu(3, 0) * pw(a, 3) +
                            R(3) * a * b *
                                (mu(0, 3) * mu(1, 2) + R(2) * mu(1, 2) * mu(2, 1) +
                                 mu(2, 1) * mu(3, 0)) +
                            mu(0, 3) * pw(b, 3)));
    out.push_back(entry("IP9", Group::Similarity,
                        one("f(2,2)*f(3,3)*f(4,4)*f(2,1)*g(3,1)*g(4,1)"),
                        mu(2, 1) * pw(b, 3) -
                            a * b *
                                (mu(0, 3) * mu(1, 2) - R(2) * mu(0, 3) * mu(3, 0) +
                                 R(4) * mu(1, 2) * mu(2, 1) + mu(2, 1) * mu(3, 0)) +
                            mu(1, 2) * pw(a, 3)));
    return out;
}

std::vector<NamedInvariant> build_affine() {
    std::vector<NamedInvariant> out;
    auto add = [&](const std::string& name, const std::string& core, const P& ref) {
        out.push_back(entry(name, Group::Affine, one(core), ref));
    };

    add("IA1", "g(1,2)^2", mu(2, 0) * mu(0, 2) - sq(mu(1, 1)));

    add("IA2", "g(1,2)^2*g(3,4)^2*g(1,3)*g(2,4)",
        R(-1) * sq(mu(0, 3)) * sq(mu(3, 0)) + R(6) * mu(0, 3) * mu(1, 2) * mu(2, 1) * mu(3, 0) -
            R(4) * mu(0, 3) * pw(mu(2, 1), 3) - R(4) * pw(mu(1, 2), 3) * mu(3, 0) +
            R(3) * sq(mu(1, 2)) * sq(mu(2, 1)));

    add("IA3", "g(1,2)*g(1,3)*g(2,3)^2",
        mu(0, 2) * mu(1, 2) * mu(3, 0) - mu(0, 2) * sq(mu(2, 1)) -
            mu(0, 3) * mu(1, 1) * mu(3, 0) + mu(0, 3) * mu(2, 0) * mu(2, 1) +
            mu(1, 1) * mu(1, 2) * mu(2, 1) - sq(mu(1, 2)) * mu(2, 0));

    add("IA4", "g(1,2)*g(1,3)*g(2,4)*g(3,4)*g(1,5)*g(4,5)",
        pw(mu(0, 2), 3) * sq(mu(3, 0)) -
            R(6) * sq(mu(0, 2)) * mu(1, 1) * mu(2, 1) * mu(3, 0) +
            R(3) * sq(mu(0, 2)) * mu(2, 0) * sq(mu(2, 1)) +
            R(6) * mu(0, 2) * sq(mu(1, 1)) * mu(1, 2) * mu(3, 0) +
            R(6) * mu(0, 2) * sq(mu(1, 1)) * sq(mu(2, 1)) -
            R(12) * mu(0, 2) * mu(1, 1) * mu(1, 2) * mu(2, 0) * mu(2, 1) +
            R(3) * mu(0, 2) * sq(mu(1, 2)) * sq(mu(2, 0)) + sq(mu(0, 3)) * pw(mu(2, 0), 3) -
            R(2) * mu(0, 3) * pw(mu(1, 1), 3) * mu(3, 0) +
            R(6) * mu(0, 3) * sq(mu(1, 1)) * mu(2, 0) * mu(2, 1) -
            R(6) * mu(0, 3) * mu(1, 1) * mu(1, 2) * sq(mu(2, 0)) -
            R(6) * pw(mu(1, 1), 3) * mu(1, 2) * mu(2, 1) +
            R(6) * sq(mu(1, 1)) * sq(mu(1, 2)) * mu(2, 0));

    add("IA5", "g(1,2)^4",
        mu(0, 4) * mu(4, 0) - R(4) * mu(1, 3) * mu(3, 1) + R(3) * sq(mu(2, 2)));

    add("IA6", "g(1,2)^2*g(1,3)^2*g(2,3)^2",
        mu(0, 4) * mu(2, 2) * mu(4, 0) - mu(0, 4) * sq(mu(3, 1)) - sq(mu(1, 3)) * mu(4, 0) +
            R(2) * mu(1, 3) * mu(2, 2) * mu(3, 1) - pw(mu(2, 2), 3));

    add("IA7", "g(1,2)^2*g(1,3)^2",
        sq(mu(0, 2)) * mu(4, 0) - R(4) * mu(0, 2) * mu(1, 1) * mu(3, 1) +
            R(2) * mu(0, 2) * mu(2, 0) * mu(2, 2) + mu(0, 4) * sq(mu(2, 0)) +
            R(4) * sq(mu(1, 1)) * mu(2, 2) - R(4) * mu(1, 1) * mu(1, 3) * mu(2, 0));

    add("IA8", "g(1,2)^2*g(2,3)^2*g(3,4)^2",
        sq(mu(0, 2)) * mu(2, 2) * mu(4, 0) - sq(mu(0, 2)) * sq(mu(3, 1)) +
            mu(0, 2) * mu(0, 4) * mu(2, 0) * mu(4, 0) -
            R(2) * mu(0, 2) * mu(1, 1) * mu(1, 3) * mu(4, 0) +
            R(2) * mu(0, 2) * mu(1, 1) * mu(2, 2) * mu(3, 1) -
            R(2) * mu(0, 2) * mu(1, 3) * mu(2, 0) * mu(3, 1) +
            mu(0, 2) * mu(2, 0) * sq(mu(2, 2)) -
            R(2) * mu(0, 4) * mu(1, 1) * mu(2, 0) * mu(3, 1) +
            mu(0, 4) * sq(mu(2, 0)) * mu(2, 2) + R(4) * sq(mu(1, 1)) * mu(1, 3) * mu(3, 1) -
            R(4) * sq(mu(1, 1)) * sq(mu(2, 2)) +
            R(2) * mu(1, 1) * mu(1, 3) * mu(2, 0) * mu(2, 2) - sq(mu(1, 3)) * sq(mu(2, 0)));

    add("IA9", "g(1,2)^2*g(2,3)*g(3,4)^2*g(4,5)*g(2,5)*g(1,5)",
        sq(mu(0, 3)) * sq(mu(2, 1)) * mu(4, 0) -
            R(2) * sq(mu(0, 3)) * mu(2, 1) * mu(3, 0) * mu(3, 1) +
            sq(mu(0, 3)) * mu(2, 2) * sq(mu(3, 0)) -
            R(2) * mu(0, 3) * sq(mu(1, 2)) * mu(2, 1) * mu(4, 0) +
            R(2) * mu(0, 3) * sq(mu(1, 2)) * mu(3, 0) * mu(3, 1) -
            R(2) * mu(0, 3) * mu(1, 2) * mu(1, 3) * sq(mu(3, 0)) +
            R(2) * mu(0, 3) * mu(1, 2) * sq(mu(2, 1)) * mu(3, 1) +
            R(2) * mu(0, 3) * mu(1, 3) * sq(mu(2, 1)) * mu(3, 0) -
            R(2) * mu(0, 3) * pw(mu(2, 1), 3) * mu(2, 2) + mu(0, 4) * sq(mu(1, 2)) * sq(mu(3, 0)) -
            R(2) * mu(0, 4) * mu(1, 2) * sq(mu(2, 1)) * mu(3, 0) + mu(0, 4) * pw(mu(2, 1), 4) +
            pw(mu(1, 2), 4) * mu(4, 0) - R(2) * pw(mu(1, 2), 3) * mu(2, 1) * mu(3, 1) -
            R(2) * pw(mu(1, 2), 3) * mu(2, 2) * mu(3, 0) +
            R(2) * sq(mu(1, 2)) * mu(1, 3) * mu(2, 1) * mu(3, 0) +
            R(3) * sq(mu(1, 2)) * sq(mu(2, 1)) * mu(2, 2) -
            R(2) * mu(1, 2) * mu(1, 3) * pw(mu(2, 1), 3));

    add("IA10", "g(1,2)^4*g(3,4)^4*g(1,3)*g(2,4)",
        R(-1) * sq(mu(0, 5)) * sq(mu(5, 0)) + R(10) * mu(0, 5) * mu(1, 4) * mu(4, 1) * mu(5, 0) -
            R(4) * mu(0, 5) * mu(2, 3) * mu(3, 2) * mu(5, 0) -
            R(16) * mu(0, 5) * mu(2, 3) * sq(mu(4, 1)) +
            R(12) * mu(0, 5) * sq(mu(3, 2)) * mu(4, 1) -
            R(16) * sq(mu(1, 4)) * mu(3, 2) * mu(5, 0) - R(9) * sq(mu(1, 4)) * sq(mu(4, 1)) +
            R(12) * mu(1, 4) * sq(mu(2, 3)) * mu(5, 0) +
            R(76) * mu(1, 4) * mu(2, 3) * mu(3, 2) * mu(4, 1) -
            R(48) * mu(1, 4) * pw(mu(3, 2), 3) - R(48) * pw(mu(2, 3), 3) * mu(4, 1) +
            R(32) * sq(mu(2, 3)) * sq(mu(3, 2)));

    add("IA11", "g(1,2)^3*g(2,4)^2*g(3,4)^3",
        R(3) * mu(3, 0) * sq(mu(2, 3)) * mu(1, 2) + R(9) * mu(4, 1) * mu(2, 3) * sq(mu(1, 2)) +
            mu(2, 3) * mu(0, 5) * sq(mu(3, 0)) + R(9) * mu(3, 2) * mu(1, 4) * sq(mu(2, 1)) +
            R(3) * mu(2, 1) * sq(mu(3, 2)) * mu(0, 3) + mu(5, 0) * mu(3, 2) * sq(mu(0, 3)) -
            sq(mu(4, 1)) * sq(mu(0, 3)) - R(9) * sq(mu(3, 2)) * sq(mu(1, 2)) -
            R(9) * sq(mu(2, 3)) * sq(mu(2, 1)) - sq(mu(1, 4)) * sq(mu(3, 0)) -
            mu(5, 0) * mu(0, 3) * mu(0, 5) * mu(3, 0) +
            R(3) * mu(5, 0) * mu(0, 3) * mu(1, 4) * mu(2, 1) -
            R(3) * mu(5, 0) * mu(0, 3) * mu(2, 3) * mu(1, 2) +
            R(3) * mu(4, 1) * mu(1, 2) * mu(0, 5) * mu(3, 0) +
            R(2) * mu(4, 1) * mu(0, 3) * mu(1, 4) * mu(3, 0) +
            R(3) * mu(4, 1) * mu(1, 2) * mu(3, 2) * mu(0, 3) -
            R(6) * mu(4, 1) * mu(0, 3) * mu(2, 3) * mu(2, 1) -
            R(9) * mu(4, 1) * mu(1, 2) * mu(1, 4) * mu(2, 1) -
            R(3) * mu(3, 2) * mu(2, 1) * mu(0, 5) * mu(3, 0) +
            R(9) * mu(3, 2) * mu(2, 1) * mu(2, 3) * mu(1, 2) -
            mu(3, 2) * mu(0, 3) * mu(2, 3) * mu(3, 0) -
            R(6) * mu(3, 2) * mu(1, 2) * mu(1, 4) * mu(3, 0) +
            R(3) * mu(2, 3) * mu(3, 0) * mu(1, 4) * mu(2, 1));

    add("IA12", "g(1,2)*g(1,3)^2*g(2,3)^3",
        mu(5, 0) * mu(1, 3) * mu(0, 3) - mu(5, 0) * mu(0, 4) * mu(1, 2) -
            R(3) * mu(4, 1) * mu(2, 2) * mu(0, 3) + mu(4, 1) * mu(1, 3) * mu(1, 2) +
            R(2) * mu(4, 1) * mu(0, 4) * mu(2, 1) + R(3) * mu(3, 2) * mu(3, 1) * mu(0, 3) -
            R(5) * mu(3, 2) * mu(1, 3) * mu(2, 1) + R(3) * mu(3, 2) * mu(2, 2) * mu(1, 2) -
            mu(3, 2) * mu(0, 4) * mu(3, 0) - mu(2, 3) * mu(4, 0) * mu(0, 3) -
            R(5) * mu(2, 3) * mu(3, 1) * mu(1, 2) + R(3) * mu(2, 3) * mu(2, 2) * mu(2, 1) +
            R(3) * mu(2, 3) * mu(1, 3) * mu(3, 0) + R(2) * mu(1, 4) * mu(4, 0) * mu(1, 2) +
            mu(1, 4) * mu(3, 1) * mu(2, 1) - R(3) * mu(1, 4) * mu(2, 2) * mu(3, 0) -
            mu(0, 5) * mu(4, 0) * mu(2, 1) + mu(0, 5) * mu(3, 1) * mu(3, 0));

    add("IA13", "g(1,2)*g(1,3)^3*g(1,4)*g(2,4)*g(3,4)^2",
        R(-1) * mu(0, 2) * mu(0, 5) * mu(3, 1) * mu(5, 0) +
            mu(0, 2) * mu(0, 5) * mu(4, 0) * mu(4, 1) +
            mu(0, 2) * mu(1, 4) * mu(2, 2) * mu(5, 0) +
            R(3) * mu(0, 2) * mu(1, 4) * mu(3, 1) * mu(4, 1) -
            R(4) * mu(0, 2) * mu(1, 4) * mu(3, 2) * mu(4, 0) -
            R(4) * mu(0, 2) * mu(2, 2) * mu(2, 3) * mu(4, 1) +
            R(3) * mu(0, 2) * mu(2, 2) * sq(mu(3, 2)) +
            R(3) * mu(0, 2) * sq(mu(2, 3)) * mu(4, 0) -
            R(2) * mu(0, 2) * mu(2, 3) * mu(3, 1) * mu(3, 2) +
            mu(0, 4) * mu(1, 4) * mu(2, 0) * mu(5, 0) -
            R(4) * mu(0, 4) * mu(2, 0) * mu(2, 3) * mu(4, 1) +
            R(3) * mu(0, 4) * mu(2, 0) * sq(mu(3, 2)) +
            R(2) * mu(0, 5) * mu(1, 1) * mu(2, 2) * mu(5, 0) -
            R(2) * mu(0, 5) * mu(1, 1) * mu(3, 1) * mu(4, 1) -
            mu(0, 5) * mu(1, 3) * mu(2, 0) * mu(5, 0) +
            mu(0, 5) * mu(2, 0) * mu(2, 2) * mu(4, 1) -
            R(2) * mu(1, 1) * mu(1, 3) * mu(1, 4) * mu(5, 0) +
            R(8) * mu(1, 1) * mu(1, 3) * mu(2, 3) * mu(4, 1) -
            R(6) * mu(1, 1) * mu(1, 3) * sq(mu(3, 2)) -
            R(6) * mu(1, 1) * mu(1, 4) * mu(2, 2) * mu(4, 1) +
            R(8) * mu(1, 1) * mu(1, 4) * mu(3, 1) * mu(3, 2) +
            R(4) * mu(1, 1) * mu(2, 2) * mu(2, 3) * mu(3, 2) -
            R(6) * mu(1, 1) * sq(mu(2, 3)) * mu(3, 1) +
            R(3) * mu(1, 3) * mu(1, 4) * mu(2, 0) * mu(4, 1) -
            R(2) * mu(1, 3) * mu(2, 0) * mu(2, 3) * mu(3, 2) -
            R(4) * mu(1, 4) * mu(2, 0) * mu(2, 2) * mu(3, 2) +
            R(3) * mu(2, 0) * mu(2, 2) * sq(mu(2, 3)));

    add("IA14", "g(1,3)*g(1,4)*g(2,4)^2*g(3,4)^2",
        sq(mu(0, 2)) * mu(1, 2) * mu(5, 0) - R(2) * sq(mu(0, 2)) * mu(2, 1) * mu(4, 1) +
            sq(mu(0, 2)) * mu(3, 0) * mu(3, 2) - mu(0, 2) * mu(0, 3) * mu(1, 1) * mu(5, 0) +
            mu(0, 2) * mu(0, 3) * mu(2, 0) * mu(4, 1) -
            mu(0, 2) * mu(1, 1) * mu(1, 2) * mu(4, 1) +
            R(5) * mu(0, 2) * mu(1, 1) * mu(2, 1) * mu(3, 2) -
            R(3) * mu(0, 2) * mu(1, 1) * mu(2, 3) * mu(3, 0) -
            mu(0, 2) * mu(1, 2) * mu(2, 0) * mu(3, 2) +
            mu(0, 2) * mu(1, 4) * mu(2, 0) * mu(3, 0) -
            mu(0, 2) * mu(2, 0) * mu(2, 1) * mu(2, 3) + R(2) * mu(0, 3) * sq(mu(1, 1)) * mu(4, 1) -
            R(3) * mu(0, 3) * mu(1, 1) * mu(2, 0) * mu(3, 2) +
            mu(0, 3) * sq(mu(2, 0)) * mu(2, 3) - mu(0, 5) * mu(1, 1) * mu(2, 0) * mu(3, 0) +
            mu(0, 5) * sq(mu(2, 0)) * mu(2, 1) - R(2) * sq(mu(1, 1)) * mu(1, 2) * mu(3, 2) +
            R(2) * sq(mu(1, 1)) * mu(1, 4) * mu(3, 0) -
            R(2) * sq(mu(1, 1)) * mu(2, 1) * mu(2, 3) +
            R(5) * mu(1, 1) * mu(1, 2) * mu(2, 0) * mu(2, 3) -
            mu(1, 1) * mu(1, 4) * mu(2, 0) * mu(2, 1) - R(2) * mu(1, 2) * mu(1, 4) * sq(mu(2, 0)));

    add("IA15", "g(1,2)^3*g(1,3)^2*g(2,4)^2*g(3,4)",
        R(-1) * mu(0, 3) * mu(0, 5) * mu(3, 0) * mu(5, 0) +
            R(2) * mu(0, 3) * mu(1, 4) * mu(2, 1) * mu(5, 0) +
            R(3) * mu(0, 3) * mu(1, 4) * mu(3, 0) * mu(4, 1) -
            R(8) * mu(0, 3) * mu(2, 1) * mu(2, 3) * mu(4, 1) +
            R(6) * mu(0, 3) * mu(2, 1) * sq(mu(3, 2)) -
            R(2) * mu(0, 3) * mu(2, 3) * mu(3, 0) * mu(3, 2) +
            mu(0, 5) * mu(1, 2) * mu(2, 1) * mu(5, 0) +
            R(2) * mu(0, 5) * mu(1, 2) * mu(3, 0) * mu(4, 1) -
            R(2) * mu(0, 5) * sq(mu(2, 1)) * mu(4, 1) -
            R(2) * sq(mu(1, 2)) * mu(1, 4) * mu(5, 0) +
            R(8) * sq(mu(1, 2)) * mu(2, 3) * mu(4, 1) - R(6) * sq(mu(1, 2)) * sq(mu(3, 2)) -
            R(3) * mu(1, 2) * mu(1, 4) * mu(2, 1) * mu(4, 1) -
            R(8) * mu(1, 2) * mu(1, 4) * mu(3, 0) * mu(3, 2) +
            R(2) * mu(1, 2) * mu(2, 1) * mu(2, 3) * mu(3, 2) +
            R(6) * mu(1, 2) * sq(mu(2, 3)) * mu(3, 0) +
            R(8) * mu(1, 4) * sq(mu(2, 1)) * mu(3, 2) - R(6) * sq(mu(2, 1)) * sq(mu(2, 3)));

    add("IA16", "g(1,2)*g(1,3)*g(1,4)^2*g(2,4)*g(3,4)",
        R(-2) * mu(4, 0) * mu(1, 1) * mu(0, 2) * mu(1, 3) + mu(4, 0) * sq(mu(1, 1)) * mu(0, 4) +
            mu(4, 0) * sq(mu(0, 2)) * mu(2, 2) - R(2) * mu(3, 1) * mu(2, 0) * mu(1, 1) * mu(0, 4) +
            R(2) * mu(3, 1) * mu(1, 1) * mu(0, 2) * mu(2, 2) - sq(mu(0, 2)) * sq(mu(3, 1)) +
            R(2) * mu(3, 1) * mu(2, 0) * mu(0, 2) * mu(1, 3) +
            R(2) * mu(2, 2) * mu(2, 0) * mu(1, 1) * mu(1, 3) + mu(2, 2) * sq(mu(2, 0)) * mu(0, 4) -
            sq(mu(1, 1)) * sq(mu(2, 2)) - R(2) * mu(2, 0) * mu(0, 2) * sq(mu(2, 2)) -
            sq(mu(2, 0)) * sq(mu(1, 3)));

    add("IA17", "g(1,2)*g(1,3)*g(1,4)*g(2,3)^2*g(2,4)",
        mu(2, 0) * mu(3, 0) * mu(1, 3) * mu(0, 3) + mu(2, 0) * mu(0, 4) * sq(mu(2, 1)) -
            mu(2, 0) * mu(2, 1) * mu(2, 2) * mu(0, 3) - mu(2, 0) * mu(2, 1) * mu(1, 3) * mu(1, 2) +
            mu(2, 0) * mu(2, 2) * sq(mu(1, 2)) - mu(2, 0) * mu(3, 0) * mu(0, 4) * mu(1, 2) +
            R(2) * mu(1, 1) * mu(2, 1) * mu(2, 2) * mu(1, 2) +
            R(2) * mu(1, 1) * mu(2, 1) * mu(3, 1) * mu(0, 3) +
            R(2) * mu(1, 1) * mu(1, 2) * mu(1, 3) * mu(3, 0) -
            R(2) * mu(1, 1) * mu(3, 0) * mu(2, 2) * mu(0, 3) -
            R(2) * mu(1, 1) * mu(3, 1) * sq(mu(1, 2)) - R(2) * mu(1, 1) * mu(1, 3) * sq(mu(2, 1)) +
            mu(0, 2) * mu(2, 2) * sq(mu(2, 1)) - mu(0, 2) * mu(2, 1) * mu(3, 1) * mu(1, 2) +
            mu(0, 2) * mu(4, 0) * sq(mu(1, 2)) - mu(0, 2) * mu(0, 3) * mu(4, 0) * mu(2, 1) +
            mu(0, 2) * mu(0, 3) * mu(3, 1) * mu(3, 0) - mu(0, 2) * mu(3, 0) * mu(2, 2) * mu(1, 2));

    add("IA18", "g(1,3)^2*g(2,4)^3*g(3,4)",
        mu(0, 2) * mu(0, 3) * mu(4, 0) * mu(2, 1) -
            R(2) * mu(4, 0) * mu(1, 2) * mu(0, 3) * mu(1, 1) + mu(4, 0) * sq(mu(0, 3)) * mu(2, 0) -
            R(3) * mu(0, 2) * mu(2, 1) * mu(3, 1) * mu(1, 2) +
            R(2) * mu(1, 1) * mu(2, 1) * mu(3, 1) * mu(0, 3) -
            mu(0, 2) * mu(0, 3) * mu(3, 1) * mu(3, 0) + R(6) * mu(1, 1) * mu(3, 1) * sq(mu(1, 2)) -
            R(4) * mu(3, 1) * mu(1, 2) * mu(0, 3) * mu(2, 0) +
            R(3) * mu(0, 2) * mu(3, 0) * mu(2, 2) * mu(1, 2) -
            R(12) * mu(1, 1) * mu(2, 1) * mu(2, 2) * mu(1, 2) +
            R(3) * mu(2, 0) * mu(2, 2) * sq(mu(1, 2)) + R(3) * mu(0, 2) * mu(2, 2) * sq(mu(2, 1)) +
            R(3) * mu(2, 0) * mu(2, 1) * mu(2, 2) * mu(0, 3) -
            R(4) * mu(1, 3) * mu(3, 0) * mu(2, 1) * mu(0, 2) +
            R(6) * mu(1, 1) * mu(1, 3) * sq(mu(2, 1)) - mu(2, 0) * mu(3, 0) * mu(1, 3) * mu(0, 3) +
            R(2) * mu(1, 1) * mu(1, 2) * mu(1, 3) * mu(3, 0) -
            R(3) * mu(2, 0) * mu(2, 1) * mu(1, 3) * mu(1, 2) + mu(0, 4) * sq(mu(3, 0)) * mu(0, 2) -
            R(2) * mu(0, 4) * mu(2, 1) * mu(3, 0) * mu(1, 1) +
            mu(2, 0) * mu(3, 0) * mu(0, 4) * mu(1, 2));

    add("IA19", "g(1,2)*g(1,3)*g(2,3)^4",
        mu(0, 2) * mu(1, 4) * mu(5, 0) - R(4) * mu(0, 2) * mu(2, 3) * mu(4, 1) +
            R(3) * mu(0, 2) * sq(mu(3, 2)) - mu(0, 5) * mu(1, 1) * mu(5, 0) +
            mu(0, 5) * mu(2, 0) * mu(4, 1) + R(3) * mu(1, 1) * mu(1, 4) * mu(4, 1) -
            R(2) * mu(1, 1) * mu(2, 3) * mu(3, 2) - R(4) * mu(1, 4) * mu(2, 0) * mu(3, 2) +
            R(3) * mu(2, 0) * sq(mu(2, 3)));

    return out;
}

std::vector<NamedInvariant> build_rotation3d() {
    std::vector<NamedInvariant> out;
    out.push_back(entry("J1", Group::Rotation3D, one("f(1,1)", 3),
                        mu3(2, 0, 0) + mu3(0, 2, 0) + mu3(0, 0, 2)));
    out.push_back(entry("J2", Group::Rotation3D, one("g(1,2,3)^2", 3),
                        mu3(2, 0, 0) * mu3(0, 2, 0) * mu3(0, 0, 2) +
                            R(2) * mu3(1, 1, 0) * mu3(1, 0, 1) * mu3(0, 1, 1) -
                            sq(mu3(0, 1, 1)) * mu3(2, 0, 0) - sq(mu3(1, 1, 0)) * mu3(0, 0, 2) -
                            sq(mu3(1, 0, 1)) * mu3(0, 2, 0)));
    CoreSum j3;
    j3.dim = 3;
    j3.add(R(1), parse_core("f(1,1)*f(2,2)", 3));
    j3.add(R(-1), parse_core("f(1,2)^2", 3));
    out.push_back(entry("J3", Group::Rotation3D, j3,
                        mu3(0, 2, 0) * mu3(0, 0, 2) - sq(mu3(0, 1, 1)) +
                            mu3(2, 0, 0) * mu3(0, 0, 2) - sq(mu3(1, 0, 1)) +
                            mu3(2, 0, 0) * mu3(0, 2, 0) - sq(mu3(1, 1, 0))));
    return out;
}

}  // namespace

const std::vector<NamedInvariant>& get_catalog(Group group) {
    static const std::vector<NamedInvariant> similarity = build_similarity();
    static const std::vector<NamedInvariant> affine = build_affine();
    static const std::vector<NamedInvariant> rotation3d = build_rotation3d();
    switch (group) {
        case Group::Similarity: return similarity;
        case Group::Affine: return affine;
        case Group::Rotation3D: return rotation3d;
    }
    throw std::logic_error("bad group");
}

std::vector<NamedInvariant> named_set(const std::string& set_name) {
    const auto& sim = get_catalog(Group::Similarity);
    if (set_name == "hu") return {sim.begin(), sim.begin() + 7};
    if (set_name == "pi") return {sim.begin() + 7, sim.end()};
    if (set_name == "affine19") return get_catalog(Group::Affine);
    if (set_name == "3d") return get_catalog(Group::Rotation3D);
    throw std::invalid_argument("unknown invariant set: " + set_name +
                                " (expected hu, pi, affine19 or 3d)");
}

std::vector<CatalogEntryCheck> verify_catalog(Group group) {
    std::vector<CatalogEntryCheck> out;
    for (const auto& inv : get_catalog(group)) {
        CatalogEntryCheck c;
        c.name = inv.name;
        MomentPolynomial t = translate(inv.core);
        c.match = proportional(t, inv.reference, c.scalar) && c.scalar.sign() > 0;
        if (!c.match)
            c.diff = "translated: " + t.str() + " ; reference: " + inv.reference.str();
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<RelationCheck> verify_relations() {
    const auto& sim = get_catalog(Group::Similarity);
    auto ref = [&](const std::string& name) -> const MomentPolynomial& {
        for (const auto& inv : sim)
            if (inv.name == name) return inv.reference;
        throw std::logic_error("missing catalog entry " + name);
    };

    // translations of the four monomial pieces of I5
    MomentPolynomial t51 = translate(parse_core("f(2,2)*f(3,3)*f(4,4)*f(2,1)*f(3,1)*f(4,1)"));
    MomentPolynomial t52 = translate(parse_core("f(2,2)*f(3,3)*f(4,4)*f(2,1)*g(3,1)*g(4,1)"));
    MomentPolynomial t53 = translate(parse_core("f(2,2)*f(3,3)*f(4,4)*g(2,1)*g(3,1)*f(4,1)"));
    MomentPolynomial t54 = translate(parse_core("f(2,2)*f(3,3)*f(4,4)*g(2,1)*f(3,1)*g(4,1)"));

    std::vector<RelationCheck> out;
    auto check = [&](const std::string& name, const MomentPolynomial& residual) {
        RelationCheck rc;
        rc.name = name;
        rc.residual = residual;
        rc.holds = residual.is_zero();
        out.push_back(std::move(rc));
    };

    check("I51 = 3*I52", t51 - Rational(3) * t52);
    check("I52 = I53", t52 - t53);
    check("I53 = I54", t53 - t54);

    check("I1 = IP1", ref("I1") - ref("IP1"));
    check("I2 = IP2 - 2*IP3", ref("I2") - (ref("IP2") - Rational(2) * ref("IP3")));
    check("I3 = -6*IP5 + IP6", ref("I3") - (Rational(-6) * ref("IP5") + ref("IP6")));
    check("I4 = 2*IP5 + IP6", ref("I4") - (Rational(2) * ref("IP5") + ref("IP6")));
    check("I5 = IP8 - 3*IP9", ref("I5") - (ref("IP8") - Rational(3) * ref("IP9")));
    check("I6 = IP4 - IP7", ref("I6") - (ref("IP4") - ref("IP7")));
    return out;
}

}  // namespace gmi

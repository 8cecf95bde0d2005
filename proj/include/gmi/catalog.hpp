#pragma once

#include <string>
#include <vector>

#include "gmi/genfun.hpp"
#include "gmi/group.hpp"
#include "gmi/polynomial.hpp"

namespace gmi {

/// A shipped invariant: generating-function core(s), the reference moment
/// polynomial it translates to, and the mu00 normalization power.
struct NamedInvariant {
    std::string name;
    Group group = Group::Similarity;
    CoreSum core;
    MomentPolynomial reference;
    int k = 0;        // absolute form is translation / mu00^k
    bool skew = false;
};

/// Similarity -> I1..I7 then IP1..IP9; Affine -> IA1..IA19; Rotation3D -> J1..J3.
const std::vector<NamedInvariant>& get_catalog(Group group);

/// Subset views used by the CLI: "hu", "pi", "affine19", "3d".
std::vector<NamedInvariant> named_set(const std::string& set_name);

struct CatalogEntryCheck {
    std::string name;
    bool match = false;
    Rational scalar;             // translate(core) == scalar * reference
    std::string diff;            // populated on mismatch
};

/// Re-translate every core and compare against its reference polynomial up
/// to a positive rational scalar.
std::vector<CatalogEntryCheck> verify_catalog(Group group);

struct RelationCheck {
    std::string name;
    bool holds = false;
    MomentPolynomial residual;   // zero when the identity holds
};

/// The shipped linear identities between invariants: the I5-decomposition
/// relations and the six reconstructions of Hu's invariants from the
/// primitive set.
std::vector<RelationCheck> verify_relations();

}  // namespace gmi

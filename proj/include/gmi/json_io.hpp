#pragma once

#include <json.hpp>

#include "gmi/catalog.hpp"
#include "gmi/discovery.hpp"
#include "gmi/independence.hpp"
#include "gmi/moments.hpp"
#include "gmi/polynomial.hpp"
#include "gmi/transform.hpp"

namespace gmi {

using Json = nlohmann::ordered_json;

/// [[p,q],...] (or [[p,q,r],...] in 3D), indices sorted.
Json monomial_json(const MomentMonomial& mono, int dim);

/// [{coeff: "num/den", monomial: [...]}, ...] in canonical term order.
Json polynomial_json(const MomentPolynomial& p);

Json moment_vector_json(const MomentVector& mv);
Json affine_map_json(const AffineMap& m);
Json invariance_report_json(const std::string& name, Group group, const InvarianceReport& rep);
Json catalog_json();
Json discovery_report_json(const DiscoveryReport& rep);

}  // namespace gmi

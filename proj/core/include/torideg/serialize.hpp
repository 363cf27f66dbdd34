#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torideg/polyhedra.hpp"
#include "torideg/tropical.hpp"

namespace torideg {

// JSON documents. Rationals are written as strings ("2/3") so that values
// round-trip exactly; parsers also accept JSON integers.

/// {"ambient_dim", "vertices", "facets": [{"c0", "c"}], "equations"}.
std::string polytope_to_json(const Polytope& P);
/// Reads the vertices; facets and equations are recomputed.
Polytope polytope_from_json(std::string_view text);

/// {"ambient_dim", "lineality", "cones": [{"dimension", "rays", "inequalities",
/// "equalities"}], "adjacency"}. Rays are taken modulo the lineality space.
std::string fan_to_json(const Fan& F);
/// Rebuilds every cone from its H-representation.
Fan fan_from_json(std::string_view text);

/// Fan document plus, per cone, the marked reduced basis and its initial ideal.
std::string groebner_fan_to_json(const GroebnerFan& G);

/// [{"dimension", "lineality_rows", "ray_matrix", "initial_ideal",
/// "monomial_free", "binomial", "toric", "prime"}].
std::string tropical_cones_to_json(const std::vector<TropicalCone>& cones);

}  // namespace torideg

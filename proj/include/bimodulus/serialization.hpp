#pragma once

#include <nlohmann/json.hpp>

#include "bimodulus/instances.hpp"
#include "bimodulus/mckay.hpp"
#include "bimodulus/moduli.hpp"

namespace bimodulus {

using json = nlohmann::ordered_json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Field& f);

/// {blocks, degree, terms: [{exp, coef}]}; exp lists both exponents of every block.
json to_json(const MultiPoly& f);
MultiPoly multipoly_from_json(const json& j);

json to_json(const ProjPoint& p, const Field& f);
ProjPoint point_from_json(const json& j);

/// {curve, twist: [m, n], minus_points, plus_points}
json to_json(const LineBundle& L);
LineBundle bundle_from_json(const json& j);

/// {model: "double-diagonal", field, k_u, k_v, a, n0, n_inf}
json to_json(const NRSheaf& s, const Field& f);
NRSheaf nr_sheaf_from_json(const json& j);

json to_json(const BimodConcrete& b);
BimodConcrete bimodule_from_json(const json& j);
bool is_concrete_bimodule(const json& j);

json to_json(const BimodDescriptor& d);
BimodDescriptor descriptor_from_json(const json& j);
bool is_descriptor(const json& j);

json to_json(const SplitType& s);
json to_json(const HomExt& h);
json to_json(const RelationsIdeal& I);
json to_json(const Quadruple& q);
Quadruple quadruple_from_json(const json& j);
json to_json(const RoundTripReport& r);
json to_json(const McKayReport& r);
json to_json(const ToricReport& r);

}  // namespace bimodulus

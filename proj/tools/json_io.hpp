#pragma once

// JSON schema shared by every subcommand.
//
//   GaussianRational  {"re": "num/den", "im": "num/den"}
//   ProjPoint         [z0, z1, z2]            canonical form
//   Conic             {"q": ProjPoint, "m": ProjPoint}
//   BinaryForm        {"degree": d, "coeffs": [z_0, ..., z_d]}   z_k multiplies s^(d-k) t^k
//   BiForm            {"bidegree": [a, b],
//                      "terms": [{"p": [e0,e1,e2], "l": [f0,f1,f2], "c": z}, ...]}
//                     terms in decreasing lexicographic monomial order
//
// Readers also accept plain integers or "n/d" strings wherever a
// GaussianRational is expected (taken as real).

#include "flagcalc/biform.hpp"
#include "flagcalc/binary_form.hpp"
#include "flagcalc/flag_geometry.hpp"
#include "flagcalc/fp_census.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace flagcalc::io {

using nlohmann::json;

json to_json(const GaussianRational& z);
json to_json(const ProjPoint& x);
json to_json(const Conic& c);
json to_json(const BinaryForm& f);
json to_json(const BiForm& f);
json to_json(const FpConic& c);

GaussianRational gaussian_from_json(const json& j);
ProjPoint point_from_json(const json& j);
Conic conic_from_json(const json& j);
BinaryForm binary_form_from_json(const json& j);
BiForm biform_from_json(const json& j);

/// {"forms": [f, g, h]} or a bare array of three forms.
BinaryFormTriple forms_from_json(const json& j);
/// {"conics": [...]} or a bare array.
std::vector<Conic> conics_from_json(const json& j);
/// A BiForm, or an object holding one under "surface" or "member".
BiForm surface_from_json(const json& j);
/// A Conic, or an object holding one under "conic".
Conic single_conic_from_json(const json& j);

/// Reads and parses a UTF-8 JSON file. Throws PreconditionError on failure.
json read_json_file(const std::string& path);

}  // namespace flagcalc::io

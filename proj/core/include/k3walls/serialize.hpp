#pragma once

// JSON and CSV encodings of the k3walls value types. Rationals are canonical
// "p/q" strings, integer vectors are [r, c, s] arrays.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "k3walls/brill_noether.hpp"
#include "k3walls/lattice.hpp"
#include "k3walls/nef_cone.hpp"
#include "k3walls/stability.hpp"
#include "k3walls/walls.hpp"

namespace k3walls {

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const ExtRational& value);
nlohmann::json to_json(const MukaiVector& v);
nlohmann::json to_json(const RationalMukaiVector& v);
nlohmann::json to_json(const ChargeValue& z);
nlohmann::json to_json(const WallShape& shape);
nlohmann::json to_json(const Wall& wall);
nlohmann::json to_json(const BNReport& report);
nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const HyperplaneEntry& entry);
nlohmann::json to_json(const HyperplaneArrangement& arrangement);

/// Throws Error(kInvalidArgument) on schema mismatch.
Rational rational_from_json(const nlohmann::json& j);
MukaiVector mukai_from_json(const nlohmann::json& j);
ChargeValue charge_from_json(const nlohmann::json& j);
Wall wall_from_json(const nlohmann::json& j);

/// Header "g,d,r,rho,w_sq,ext1,grass,dimV,verdict".
std::string bn_csv_header();
std::string bn_csv_row(const BNReport& report);

}  // namespace k3walls

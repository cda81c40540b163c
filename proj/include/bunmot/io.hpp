#pragma once

/**
 * @file io.hpp
 * @brief Curve profiles, built-in fixtures and JSON encodings of results.
 */

#include "bunmot/curve.hpp"
#include "bunmot/hn.hpp"
#include "bunmot/laurent.hpp"
#include "bunmot/motclass.hpp"
#include "bunmot/quot.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bunmot {

/// {"name", "genus", "q", "zeta_numerator"}; integers may be JSON integers or decimal strings, never floats.
CurveData curve_from_json(const nlohmann::json& j);
nlohmann::json curve_to_json(const CurveData& c);
CurveData load_curve_file(const std::string& path);

/// Profiles shipped with the library: p1_f2, p1_f3, ell_f2, ell_f3, genus2_f2.
const std::vector<CurveData>& builtin_curves();
const CurveData& builtin_curve(const std::string& name);

/// A path to a profile file, or the name of a built-in profile (".json" optional).
ValidatedCurve resolve_curve(const std::string& spec);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Integer& z);
nlohmann::json to_json(const LaurentQ& s);
nlohmann::json to_json(const Region& r);
nlohmann::json to_json(const MotClass& x);
nlohmann::json to_json(const HNType& t);
nlohmann::json to_json(const StratumCount& s);

} // namespace bunmot

#pragma once

#include <nlohmann/json_fwd.hpp>

#include "plethy/partitions.hpp"
#include "plethy/series.hpp"

// Canonical JSON encodings (byte-stable: terms appear in the display
// ordering, coefficients always as "num/den"):
//   Poly2        [{"u": int, "v": int, "c": "num/den"}, ...]
//   PolyX        [{"x": int, "c": "num/den"}, ...]
//   TruncSeries  {"order": N, "coeffs": [Poly2, ...]}
namespace plethy {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Poly2& p);
nlohmann::json to_json(const PolyX& p);
nlohmann::json to_json(const TruncSeries& s);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const RectPartition& rp);

Rational rational_from_json(const nlohmann::json& j);
Poly2 poly2_from_json(const nlohmann::json& j);
PolyX polyx_from_json(const nlohmann::json& j);
TruncSeries series_from_json(const nlohmann::json& j);

} // namespace plethy

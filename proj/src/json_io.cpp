#include "plethy/json_io.hpp"

#include <nlohmann/json.hpp>

namespace plethy {

using nlohmann::json;

json to_json(const Rational& r) { return r.str_frac(); }

json to_json(const Poly2& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"u", m.u}, {"v", m.v}, {"c", c.str_frac()}});
    return out;
}

json to_json(const PolyX& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"x", e}, {"c", c.str_frac()}});
    return out;
}

json to_json(const TruncSeries& s) {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(to_json(s.coeff(n)));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Partition& p) { return {{"n", p.n}, {"mult", p.mult}}; }

json to_json(const RectPartition& rp) {
    json rects = json::array();
    for (const auto& [lh, k] : rp.mult)
        rects.push_back({{"l", lh.first}, {"h", lh.second}, {"k", k}});
    return {{"n", rp.n}, {"rects", rects}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw Error("JSON: expected a rational as integer or \"num/den\" string");
}

Poly2 poly2_from_json(const json& j) {
    if (!j.is_array()) throw Error("JSON: Poly2 must be an array of terms");
    Poly2 p;
    for (const auto& t : j)
        p.add_term(t.at("u").get<int>(), t.at("v").get<int>(), rational_from_json(t.at("c")));
    return p;
}

PolyX polyx_from_json(const json& j) {
    if (!j.is_array()) throw Error("JSON: PolyX must be an array of terms");
    PolyX p;
    for (const auto& t : j) p.add_term(t.at("x").get<int>(), rational_from_json(t.at("c")));
    return p;
}

TruncSeries series_from_json(const json& j) {
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw Error("JSON: series must carry exactly order+1 coefficients");
    TruncSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, poly2_from_json(coeffs[n]));
    return s;
}

} // namespace plethy

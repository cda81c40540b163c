#include "bunmot/io.hpp"

#include "bunmot/error.hpp"

#include <filesystem>
#include <fstream>

namespace bunmot {

namespace {

Integer json_integer(const nlohmann::json& v, const std::string& field) {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
        if (ok) return Integer(s);
    }
    throw Error(ErrorKind::BadCurveData, "field '" + field + "' must be an integer");
}

CurveData fixture(const std::string& name, int g, int q, std::vector<int> p) {
    CurveData c{name, g, q, {}};
    for (int a : p) c.zeta_numerator.emplace_back(a);
    return c;
}

} // namespace

CurveData curve_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorKind::BadCurveData, "curve profile must be a JSON object");
    for (const char* key : {"genus", "q", "zeta_numerator"})
        if (!j.contains(key)) throw Error(ErrorKind::BadCurveData, std::string("missing field '") + key + "'");
    CurveData c;
    c.name = j.value("name", std::string("unnamed"));
    const Integer g = json_integer(j.at("genus"), "genus");
    if (!g.fits_sint_p() || g < 0) throw Error(ErrorKind::BadCurveData, "genus out of range");
    c.genus = static_cast<int>(g.get_si());
    c.q = json_integer(j.at("q"), "q");
    if (!j.at("zeta_numerator").is_array()) throw Error(ErrorKind::BadCurveData, "zeta_numerator must be an array");
    for (const auto& a : j.at("zeta_numerator")) c.zeta_numerator.push_back(json_integer(a, "zeta_numerator"));
    return c;
}

nlohmann::json curve_to_json(const CurveData& c) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : c.zeta_numerator) coeffs.push_back(to_json(a));
    return {{"name", c.name}, {"genus", c.genus}, {"q", to_json(c.q)}, {"zeta_numerator", coeffs}};
}

CurveData load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadCurveData, "cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::BadCurveData, path + ": " + e.what());
    }
    return curve_from_json(j);
}

const std::vector<CurveData>& builtin_curves() {
    static const std::vector<CurveData> curves{
        fixture("p1_f2", 0, 2, {1}),
        fixture("p1_f3", 0, 3, {1}),
        fixture("ell_f2", 1, 2, {1, 0, 2}),
        fixture("ell_f3", 1, 3, {1, 1, 3}),
        fixture("genus2_f2", 2, 2, {1, 1, 2, 2, 4}),
    };
    return curves;
}

const CurveData& builtin_curve(const std::string& name) {
    for (const auto& c : builtin_curves())
        if (c.name == name) return c;
    throw Error(ErrorKind::BadCurveData, "no built-in curve named '" + name + "'");
}

ValidatedCurve resolve_curve(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) return validate_curve(load_curve_file(spec));
    std::string name = std::filesystem::path(spec).filename().string();
    if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
    return validate_curve(builtin_curve(name));
}

nlohmann::json to_json(const Rational& r) { return to_string(r); }

nlohmann::json to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

nlohmann::json to_json(const LaurentQ& s) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [e, c] : s.coefficients()) coeffs[std::to_string(e)] = to_string(c);
    nlohmann::json out{{"q", to_json(s.q())}, {"coefficients", coeffs}, {"value", to_string(s.value())}};
    out["order"] = s.order() ? nlohmann::json(*s.order()) : nlohmann::json(nullptr);
    return out;
}

nlohmann::json to_json(const Region& r) {
    auto ext = [](const Ext& e) { return e.finite() ? nlohmann::json(e.value()) : nlohmann::json(e.str()); };
    return {{"vd", {ext(r.vd.lo), ext(r.vd.hi)}}, {"twist", {ext(r.twist.lo), ext(r.twist.hi)}}};
}

nlohmann::json to_json(const MotClass& x) {
    nlohmann::json out{{"text", to_text(x)}, {"terms", x.size()}, {"window", to_json(x.window())},
                       {"support", to_json(x.support())}};
    out["genus"] = x.genus() ? nlohmann::json(*x.genus()) : nlohmann::json(nullptr);
    return out;
}

nlohmann::json to_json(const HNType& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : t.blocks) blocks.push_back({b.rank, b.degree});
    return blocks;
}

nlohmann::json to_json(const StratumCount& s) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : s.sym_counts) counts.push_back(to_json(c));
    return {{"comp", s.info.comp},
            {"codim_plus", s.info.codim_plus},
            {"fixed_dim", s.info.fixed_dim},
            {"sym_counts", counts},
            {"cell_count", to_json(s.cell_count)}};
}

} // namespace bunmot

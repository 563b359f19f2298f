#include "toricnp/report_json.hpp"

namespace toricnp::json {

Json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Json to_json(const Rational& r) { return Json::array({to_json(r.num()), to_json(r.den())}); }

Json to_json(const cyclo::CycInt& x) {
    Json out = Json::array();
    for (const auto& c : x.coeffs()) out.push_back(c.get_str());
    return out;
}

Json to_json(const PolygonData& poly) {
    Json vertices = Json::array();
    for (const auto& v : poly.vertices()) vertices.push_back(Json::array({v.x, to_json(v.y)}));
    Json slopes = Json::array();
    for (const auto& s : poly.slopes()) slopes.push_back(to_json(s));
    Json out;
    out["vertices"] = std::move(vertices);
    out["slopes"] = std::move(slopes);
    return out;
}

Json to_json(const geometry::HodgeData& hodge) {
    Json out;
    out["n"] = hodge.n;
    out["W"] = hodge.W;
    out["H"] = hodge.H;
    out["polygon"] = to_json(hodge.polygon);
    return out;
}

Json to_json(const slopes::PredictionReport& report) {
    Json out;
    out["n"] = report.params.n;
    out["p"] = report.params.p;
    out["B"] = report.B;
    out["ordinary"] = report.ordinary;
    out["p_bound_thm15"] = to_json(report.p_bound_thm15);
    out["p_bound_thm17"] = report.p_bound_thm17;
    out["polygon"] = to_json(report.polygon);
    out["warnings"] = report.warnings;
    return out;
}

Json to_json(const slopes::Assumption14Report& report) {
    Json levels = Json::array();
    for (const auto& level : report.per_m) {
        Json l;
        l["m"] = level.m;
        l["all_nonzero"] = level.all_nonzero;
        l["M"] = to_json(level.max_abs_det);
        levels.push_back(std::move(l));
    }
    Json out;
    out["n"] = report.n;
    out["overall"] = report.overall;
    out["per_m"] = std::move(levels);
    return out;
}

Json to_json(const slopes::Assumption16Result& result) {
    Json out;
    out["ok"] = result.ok;
    out["ord"] = result.ord;
    return out;
}

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const oracle::OracleReport& report) {
    Json coeffs = Json::array();
    for (const auto& c : report.lpoly.coeffs) coeffs.push_back(to_json(c));
    Json ords = Json::array();
    for (const auto& o : report.coefficient_ords) ords.push_back(o ? to_json(*o) : Json(nullptr));

    Json out;
    out["n"] = report.n;
    out["p"] = report.p;
    out["t"] = report.t;
    out["coefficients"] = std::move(coeffs);
    out["coefficient_ords"] = std::move(ords);
    out["polygon"] = to_json(report.polygon);
    out["hodge"] = to_json(report.hodge);
    out["hodge_ok"] = report.hodge_ok;
    out["predicted"] = report.predicted ? to_json(*report.predicted) : Json(nullptr);
    out["prediction_applicable"] = report.prediction_applicable;
    if (report.prediction_applicable) {
        out["prediction_match"] = optional_bool(report.prediction_match);
    } else {
        out["prediction_match"] = "not-applicable";
    }
    out["informational_match"] = optional_bool(report.informational_match);
    out["completion_pivot"] = report.pivot;
    out["cross_checks"] = report.cross_checks;
    out["direct_compared"] = report.direct_compared;
    out["degree_exact"] = optional_bool(report.degree_exact);
    out["purity_deviation"] = report.purity_deviation;
    out["warnings"] = report.warnings;
    return out;
}

}  // namespace toricnp::json

#include "cli/report_json.hpp"

namespace lislab::cli {

Json counts_to_json(const OpCounts& c) {
    return Json{{"inserts", c.inserts}, {"deletes", c.deletes}, {"updates", c.updates}, {"queries", c.queries}};
}

Json report_to_json(const ReductionReport& r) {
    Json j;
    j["problem"] = r.problem;
    j[r.problem == "omv" ? "m" : "n"] = r.size;
    j["M"] = r.bound;
    j["seeds"] = Json::array({r.seed});
    j["counts"] = counts_to_json(r.counts);
    j["post_build_counts"] = counts_to_json(r.post_build);
    j["points"] = r.points;
    j["agree"] = r.agree ? Json(*r.agree) : Json(nullptr);
    j["timings_ms"] = Json{{"build", r.timings.build_ms}, {"update", r.timings.update_ms}, {"query", r.timings.query_ms}};
    return j;
}

Json check_to_json(const FormulaCheck& c) {
    Json j;
    j["kind"] = c.kind;
    j["n"] = c.n;
    j["M"] = c.multiplier;
    j["seed"] = c.seed;
    j["i"] = c.i;
    j["i_prime"] = c.i_prime;
    j["j"] = c.j;
    j["predicted"] = c.predicted;
    j["oracle"] = c.oracle ? Json(*c.oracle) : Json(nullptr);
    j["pass"] = c.passed;
    return j;
}

Json without_timings(Json report) {
    if (report.is_object()) {
        report.erase("timings_ms");
        for (auto& [key, value] : report.items()) value = without_timings(value);
    } else if (report.is_array()) {
        for (auto& value : report) value = without_timings(value);
    }
    return report;
}

}  // namespace lislab::cli

#pragma once

#include <json.hpp>

#include <limits>
#include <stdexcept>

#include "classifier.hpp"
#include "critical.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "segre.hpp"
#include "systems.hpp"

namespace cohp1 {

using Json = nlohmann::ordered_json;

/// JSON carries integers as numbers; everything at desk scale fits in 64
/// bits, and anything larger is a bug worth hearing about.
inline std::int64_t json_int(const Int& x) {
    if (x < std::numeric_limits<std::int64_t>::min() ||
        x > std::numeric_limits<std::int64_t>::max())
        throw std::domain_error("json_int: value exceeds 64 bits: " + x.str());
    return static_cast<std::int64_t>(x);
}

inline Json json_of(const Rational& r) { return r.str(); }

inline Json json_of(const SystemType& s) {
    return Json{{"n", json_int(s.n)}, {"d", json_int(s.d)}, {"k", json_int(s.k)}};
}

inline Json json_of(const Coordinates& c) {
    return Json{{"a", json_int(c.a)}, {"t", json_int(c.t)}, {"l", json_int(c.l)},
                {"m", json_int(c.m)}};
}

inline Json json_of(const AlphaRange& r) {
    Json j;
    j["lower"] = r.lower.str();
    j["upper"] = r.upper ? Json(r.upper->str()) : Json("inf");
    return j;
}

inline Json json_of(const CriticalDataSet& w) {
    Json j;
    j["parent"] = json_of(w.parent);
    j["n1"] = json_int(w.n1);
    j["d1"] = json_int(w.d1);
    j["k1"] = json_int(w.k1);
    j["n2"] = json_int(w.n2);
    j["d2"] = json_int(w.d2);
    j["k2"] = json_int(w.k2);
    j["alpha_c"] = w.alpha_c ? Json(w.alpha_c->str()) : Json(nullptr);
    j["e"] = json_int(w.e);
    j["f"] = w.f ? Json(json_int(*w.f)) : Json(nullptr);
    const FlipNumbers fn = flip_numbers(w);
    j["c12"] = json_int(fn.c12);
    j["c21"] = json_int(fn.c21);
    if (w.parent.k > 0 && w.parent.k < w.parent.n) {
        const AllowabilityReport rep = is_allowable(w);
        j["allowable"] = rep.allowable;
        j["failed_conditions"] = rep.failed_conditions;
    } else {
        // Allowability is only defined below the full-section regime.
        j["allowable"] = Json(nullptr);
        j["failed_conditions"] = Json(nullptr);
    }
    return j;
}

inline Json json_of(const EvidenceItem& e) {
    Json j;
    j["label"] = e.label;
    if (e.alpha) j["alpha"] = e.alpha->str();
    if (e.outcome) j["outcome"] = to_string(*e.outcome);
    return j;
}

inline Json json_of(const ExistenceVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.range) j["range"] = json_of(*v.range);
    j["necessary"] = json_of(v.necessary);
    j["evidence"] = Json::array();
    for (const EvidenceItem& e : v.evidence) j["evidence"].push_back(json_of(e));
    return j;
}

inline Json json_of(const StabilityCheck& c) {
    Json j;
    j["ok"] = c.ok;
    j["witnesses"] = Json::array();
    for (const QWitness& w : c.witnesses) {
        j["witnesses"].push_back(Json{{"q", json_int(w.q)},
                                      {"bound", json_int(w.bound)},
                                      {"threshold", w.threshold.str()},
                                      {"ok", w.ok}});
    }
    return j;
}

inline Json json_of(const NonpositiveHit& h) {
    Json j = json_of(h.wall);
    const char* flag = (h.fn.c12 <= 0 && h.fn.c21 <= 0) ? "both"
                       : (h.fn.c12 <= 0)                ? "c12"
                                                        : "c21";
    j["nonpositive"] = flag;
    return j;
}

inline Json json_of(const ReportRow& r) {
    Json j;
    j["type"] = json_of(r.sys);
    j["necessary"] = json_of(r.necessary);
    j["status"] = to_string(r.verdict.status);
    if (r.verdict.range) j["range"] = json_of(*r.verdict.range);
    j["walls"] = Json::array();
    for (const auto& [alpha, outcome] : r.walls)
        j["walls"].push_back(Json{{"alpha", alpha.str()}, {"outcome", to_string(outcome)}});
    j["flagged"] = r.flagged;
    return j;
}

}  // namespace cohp1

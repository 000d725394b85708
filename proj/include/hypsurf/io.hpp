#pragma once

// JSON and CSV encodings. Needs nlohmann/json ("json.hpp") on the include
// path; the rest of the library does not.

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypsurf/boundary.hpp"
#include "hypsurf/fuchsian.hpp"
#include "hypsurf/pants.hpp"
#include "hypsurf/surface.hpp"

namespace hypsurf::io {

using Json = nlohmann::ordered_json;

/// %.17g, which round-trips every double.
inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline void write_string(std::string& out, const std::string& s) {
    out += Json(s).dump(-1, ' ', false, nlohmann::detail::error_handler_t::strict);
}

inline void write_json(std::string& out, const Json& j) {
    switch (j.type()) {
    case Json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) out += ',';
            first = false;
            write_string(out, k);
            out += ':';
            write_json(out, v);
        }
        out += '}';
        break;
    }
    case Json::value_t::array: {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ',';
            write_json(out, j[i]);
        }
        out += ']';
        break;
    }
    case Json::value_t::number_float: {
        const double x = j.get<double>();
        if (!std::isfinite(x)) throw Error(ErrorCode::NumericFailure, "non-finite number in JSON output");
        out += format_double(x);
        break;
    }
    default: out += j.dump(); break;
    }
}

}  // namespace detail

/// Compact JSON with every float at 17 significant digits.
inline std::string dump(const Json& j) {
    std::string out;
    detail::write_json(out, j);
    return out;
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Surfaces

namespace detail {

inline std::uint32_t get_count(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1'000'000) {
        throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be an integer in 0..1000000");
    }
    return static_cast<std::uint32_t>(v.get<std::int64_t>());
}

inline bool get_flag(const Json& j, const char* key) {
    if (!j.contains(key)) return false;
    if (!j.at(key).is_boolean()) throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be a boolean");
    return j.at(key).get<bool>();
}

}  // namespace detail

inline Json to_json(const EulerCharacteristic& chi) {
    return chi.is_finite() ? Json(chi.value()) : Json("-inf");
}

inline Json to_json(const SurfaceDescription& d) {
    struct Visitor {
        Json operator()(const FiniteType& f) const {
            return Json{{"kind", "finite"}, {"g", f.signature.g}, {"c", f.signature.c}, {"b", f.signature.b},
                        {"a", f.signature.a}};
        }
        Json operator()(const HalfPlaneSurface&) const { return Json{{"kind", "half_plane"}}; }
        Json operator()(const DoublyInfiniteStrip&) const { return Json{{"kind", "strip"}}; }
        Json operator()(const InfiniteType& i) const {
            return Json{{"kind", "infinite"}, {"inf_boundary", i.infinite_boundary}, {"inf_chi", i.infinite_chi}};
        }
    };
    return std::visit(Visitor{}, d.variant());
}

inline SurfaceDescription description_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw Error(ErrorCode::InvalidInput, "surface description needs a string field 'kind'");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        return SurfaceDescription::finite(detail::get_count(j, "g"), detail::get_count(j, "c"),
                                          detail::get_count(j, "b"), detail::get_count(j, "a"));
    }
    if (kind == "half_plane") return SurfaceDescription::half_plane();
    if (kind == "strip") return SurfaceDescription::strip();
    if (kind == "infinite") {
        return SurfaceDescription::infinite(detail::get_flag(j, "inf_boundary"), detail::get_flag(j, "inf_chi"));
    }
    throw Error(ErrorCode::InvalidInput, "unknown surface kind '" + kind + "'");
}

inline Json to_json(const StandardnessVerdict& v) {
    Json j{{"standard", v.standard}, {"reason", std::string(to_string(v.reason))}};
    j["chi"] = v.chi ? to_json(*v.chi) : Json(nullptr);
    if (v.name) j["name"] = *v.name;
    return j;
}

inline Json to_json(const Doubling& d) {
    Json j{{"double", to_json(d.surface)}};
    j["chi_source"] = d.chi_source ? to_json(*d.chi_source) : Json(nullptr);
    j["chi_double"] = to_json(d.chi_double);
    j["r"] = d.noncompact_boundary;
    j["chi_formula"] = d.chi_minus_r ? Json(*d.chi_minus_r) : Json(nullptr);
    j["chi_formula_plus_r"] = d.chi_plus_r ? Json(*d.chi_plus_r) : Json(nullptr);
    return j;
}

inline Json thirteen_json() {
    Json list = Json::array();
    for (const auto& s : thirteen_list()) {
        Json e = to_json(s.description);
        e["name"] = std::string(s.name);
        list.push_back(e);
    }
    return list;
}

// ---------------------------------------------------------------------------
// Pants

inline Json to_json(const SeamLength& s) { return s.is_infinite() ? Json("inf") : Json(s.value()); }

inline Json to_json(const PantsGeometry& p) {
    return Json{{"cuffs", {p.cuffs.x1, p.cuffs.x2, p.cuffs.x3}},
                {"seams", {{"d12", to_json(p.seams[0])}, {"d23", to_json(p.seams[1])}, {"d31", to_json(p.seams[2])}}},
                {"area", p.area},
                {"horocycle_length", p.horocycle_length}};
}

inline Json to_json(const PantsDecompositionPlan& plan) {
    Json j;
    const Signature& s = plan.signature;
    j["signature"] = {s.g, s.c, s.b, s.a};
    j["pants"] = Json::array();
    for (const auto& p : plan.pants) j["pants"].push_back({{"id", p.id}, {"cuffs", {p.cuffs.x1, p.cuffs.x2, p.cuffs.x3}}});
    j["gluings"] = Json::array();
    for (const auto& g : plan.gluings) {
        j["gluings"].push_back({{"from", g.from.id()},
                                {"to", g.to.id()},
                                {"length", g.length},
                                {"twist", g.twist},
                                {"kind", std::string(to_string(g.kind))}});
    }
    j["crosscaps"] = Json::array();
    for (const auto& c : plan.crosscaps) j["crosscaps"].push_back({{"slot", c.slot.id()}, {"length", c.length}});
    j["boundary"] = Json::array();
    for (const auto& b : plan.boundary) {
        j["boundary"].push_back({{"slot", b.slot.id()}, {"label", b.label}, {"length", b.length}});
    }
    j["cusps"] = Json::array();
    for (const auto& c : plan.cusps) j["cusps"].push_back({{"slot", c.slot.id()}});
    return j;
}

namespace detail {

inline double get_real(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

inline std::size_t get_index(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be a nonnegative integer");
    }
    return j.at(key).get<std::size_t>();
}

inline const Json& get_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be an array");
    }
    return j.at(key);
}

}  // namespace detail

inline PantsDecompositionPlan plan_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "plan must be a JSON object");
    PantsDecompositionPlan plan;
    if (j.contains("signature")) {
        const Json& s = j.at("signature");
        if (!s.is_array() || s.size() != 4) throw Error(ErrorCode::InvalidInput, "signature must be [g,c,b,a]");
        for (const auto& v : s) {
            if (!v.is_number_unsigned()) throw Error(ErrorCode::InvalidInput, "signature entries must be nonnegative");
        }
        plan.signature = Signature{s[0].get<std::uint32_t>(), s[1].get<std::uint32_t>(), s[2].get<std::uint32_t>(),
                                   s[3].get<std::uint32_t>()};
    }
    for (const auto& p : detail::get_array(j, "pants")) {
        const Json& c = detail::get_array(p, "cuffs");
        if (c.size() != 3 || !c[0].is_number() || !c[1].is_number() || !c[2].is_number()) {
            throw Error(ErrorCode::InvalidInput, "pants cuffs must be three numbers");
        }
        plan.pants.push_back({detail::get_index(p, "id"), {c[0].get<double>(), c[1].get<double>(), c[2].get<double>()}});
    }
    for (const auto& g : detail::get_array(j, "gluings")) {
        const std::string kind = g.value("kind", std::string("internal"));
        if (kind != "internal" && kind != "handle") throw Error(ErrorCode::InvalidInput, "unknown gluing kind '" + kind + "'");
        plan.gluings.push_back({CuffSlot::from_id(detail::get_index(g, "from")), CuffSlot::from_id(detail::get_index(g, "to")),
                                detail::get_real(g, "length"), g.contains("twist") ? detail::get_real(g, "twist") : 0.0,
                                kind == "handle" ? GluingKind::Handle : GluingKind::Internal});
    }
    for (const auto& c : detail::get_array(j, "crosscaps")) {
        plan.crosscaps.push_back({CuffSlot::from_id(detail::get_index(c, "slot")), detail::get_real(c, "length"), true});
    }
    for (const auto& b : detail::get_array(j, "boundary")) {
        plan.boundary.push_back(
            {CuffSlot::from_id(detail::get_index(b, "slot")), detail::get_index(b, "label"), detail::get_real(b, "length")});
    }
    for (const auto& c : detail::get_array(j, "cusps")) {
        plan.cusps.push_back({CuffSlot::from_id(detail::get_index(c, "slot"))});
    }
    return plan;
}

inline Json to_json(const RealizedMetric& m) {
    return Json{{"total_area", m.total_area}, {"cuff_lengths", m.cuff_lengths}, {"valid", m.valid}};
}

// ---------------------------------------------------------------------------
// Samples

inline void write_csv(std::ostream& os, const EndpointSample& s) {
    os << "theta,word\n";
    for (const auto& a : s.angles) os << format_double(a.angle.theta()) << ',' << a.word.to_string() << '\n';
}

inline Json to_json(const EndpointSample& s) {
    Json pts = Json::array();
    for (const auto& a : s.angles) pts.push_back({{"theta", a.angle.theta()}, {"word", a.word.to_string()}});
    return Json{{"mode", s.mode == SampleMode::AxisEndpoints ? "axes" : "orbit"},
                {"size", s.size()},
                {"max_gap", max_angular_gap(s)},
                {"points", pts}};
}

inline void write_csv(std::ostream& os, const CircleMapSample& s) {
    os << "theta_in,theta_out,word\n";
    for (const auto& p : s.pairs) {
        os << format_double(p.theta_in.theta()) << ',' << format_double(p.theta_out.theta()) << ','
           << p.provenance.to_string() << '\n';
    }
}

inline Json to_json(const CircleMapSample& s) {
    Json pairs = Json::array();
    for (const auto& p : s.pairs) {
        pairs.push_back({{"theta_in", p.theta_in.theta()},
                         {"theta_out", p.theta_out.theta()},
                         {"word", p.provenance.to_string()}});
    }
    return Json{{"size", s.size()}, {"considered", s.considered}, {"skipped", s.skipped}, {"pairs", pairs}};
}

inline Json to_json(const IdentityVerdict& v) {
    Json near = Json::array();
    for (const auto& c : v.near_minimizers) near.push_back({{"word", c.word.to_string()}, {"residual", c.residual}});
    return Json{{"identity", v.identity},
                {"best_inner", v.best_inner.to_string()},
                {"residual", v.residual},
                {"near_minimizers", near}};
}

inline Json to_json(const ExtensionReport& r) {
    Json mod = Json::array();
    for (const auto& [gin, gout] : r.modulus) mod.push_back({gin, gout});
    return Json{{"orientation", std::string(to_string(r.orientation))},
                {"max_gap_in", r.max_gap_in},
                {"max_image_gap", r.max_image_gap},
                {"modulus", mod}};
}

}  // namespace hypsurf::io

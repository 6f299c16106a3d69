#pragma once

#include <json.hpp>

#include "hexflip/manifolds.hpp"

// JSON forms of the report types.  Integers are decimal strings throughout:
// entries are arbitrary precision and must round-trip exactly.

namespace hexflip {

using nlohmann::json;

inline json int_json(const Int& v) { return v.get_str(); }
inline Int int_from_json(const json& j) { return Int(j.get<std::string>()); }

inline json to_json(const Mat& m) {
    return json::array({int_json(m.a), int_json(m.b), int_json(m.c), int_json(m.d)});
}
inline Mat mat_from_json(const json& j) {
    return Mat(int_from_json(j.at(0)), int_from_json(j.at(1)), int_from_json(j.at(2)),
               int_from_json(j.at(3)));
}

inline json to_json(const OperatorClass& oc) {
    json j;
    switch (oc.kind) {
        case OperatorClass::Kind::Elliptic:
            j["kind"] = "elliptic";
            j["period"] = oc.period;
            break;
        case OperatorClass::Kind::Parabolic:
            j["kind"] = "parabolic";
            j["sign"] = oc.sign;
            j["n"] = int_json(oc.twist);
            break;
        case OperatorClass::Kind::Hyperbolic:
            j["kind"] = "hyperbolic";
            break;
    }
    return j;
}
inline OperatorClass operator_class_from_json(const json& j) {
    OperatorClass oc;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "elliptic") {
        oc.kind = OperatorClass::Kind::Elliptic;
        oc.period = j.at("period").get<int>();
    } else if (kind == "parabolic") {
        oc.kind = OperatorClass::Kind::Parabolic;
        oc.sign = j.at("sign").get<int>();
        oc.twist = int_from_json(j.at("n"));
    } else {
        oc.kind = OperatorClass::Kind::Hyperbolic;
    }
    return oc;
}

inline json to_json(const SweptCell& c) {
    json j;
    j["birth_flip"] = c.birth_flip;
    j["death_flip"] = c.death_flip;
    if (c.boundary_length) j["boundary_length"] = int_json(*c.boundary_length);
    else j["boundary_at_least"] = int_json(c.boundary_at_least);
    j["touches_fiber"] = c.touches_fiber;
    return j;
}
inline SweptCell swept_cell_from_json(const json& j) {
    SweptCell c;
    c.birth_flip = j.at("birth_flip").get<int>();
    c.death_flip = j.at("death_flip").get<int>();
    if (j.contains("boundary_length")) c.boundary_length = int_from_json(j.at("boundary_length"));
    else c.boundary_at_least = int_from_json(j.at("boundary_at_least"));
    c.touches_fiber = j.at("touches_fiber").get<bool>();
    return c;
}

inline json to_json(const SpineCensus& s) {
    json cells = json::array();
    for (const auto& c : s.swept_cells) cells.push_back(to_json(c));
    return json{{"n_vertices", int_json(s.n_vertices)},
                {"n_edges", int_json(s.n_edges)},
                {"n_cells", int_json(s.n_cells)},
                {"fiber_pentagons", s.fiber_pentagons},
                {"swept_cells", cells},
                {"pseudominimal", s.pseudominimal}};
}
inline SpineCensus spine_census_from_json(const json& j) {
    SpineCensus s;
    s.n_vertices = int_from_json(j.at("n_vertices"));
    s.n_edges = int_from_json(j.at("n_edges"));
    s.n_cells = int_from_json(j.at("n_cells"));
    s.fiber_pentagons = j.at("fiber_pentagons").get<int>();
    for (const auto& c : j.at("swept_cells")) s.swept_cells.push_back(swept_cell_from_json(c));
    s.pseudominimal = j.at("pseudominimal").get<bool>();
    return s;
}

inline json to_json(const Homology& h) {
    json t = json::array();
    for (const auto& d : h.torsion) t.push_back(int_json(d));
    return json{{"betti", int_json(h.betti)}, {"torsion", t}};
}
inline Homology homology_from_json(const json& j) {
    Homology h;
    h.betti = int_from_json(j.at("betti"));
    for (const auto& d : j.at("torsion")) h.torsion.push_back(int_from_json(d));
    return h;
}

inline json to_json(const TorusBundleReport& r) {
    json j{{"input_matrix", to_json(r.input_matrix)},
           {"operator_class", to_json(r.operator_class)},
           {"c_matrix", int_json(r.c_matrix)},
           {"c_operator", int_json(r.c_operator)},
           {"minimal_matrix", to_json(r.minimal_matrix)},
           {"conjectured_complexity", int_json(r.conjectured_complexity)},
           {"upper_bound_source", r.upper_bound_source},
           {"homology", to_json(r.homology)},
           {"lower_bound_homology", int_json(r.lower_bound_homology)},
           {"homeo_key", r.homeo_key}};
    if (r.census) j["census"] = to_json(*r.census);
    if (!r.flat_structure.empty()) j["flat_structure"] = r.flat_structure;
    return j;
}
inline TorusBundleReport torus_bundle_report_from_json(const json& j) {
    TorusBundleReport r;
    r.input_matrix = mat_from_json(j.at("input_matrix"));
    r.operator_class = operator_class_from_json(j.at("operator_class"));
    r.c_matrix = int_from_json(j.at("c_matrix"));
    r.c_operator = int_from_json(j.at("c_operator"));
    r.minimal_matrix = mat_from_json(j.at("minimal_matrix"));
    r.conjectured_complexity = int_from_json(j.at("conjectured_complexity"));
    r.upper_bound_source = j.at("upper_bound_source").get<std::string>();
    r.homology = homology_from_json(j.at("homology"));
    r.lower_bound_homology = int_from_json(j.at("lower_bound_homology"));
    if (j.contains("census")) r.census = spine_census_from_json(j.at("census"));
    if (j.contains("flat_structure")) r.flat_structure = j.at("flat_structure").get<std::string>();
    r.homeo_key = j.at("homeo_key").get<std::string>();
    return r;
}

inline json to_json(const LensReport& r) {
    return json{{"p", int_json(r.p)},
                {"q", int_json(r.q)},
                {"canonical_q", int_json(r.canonical_q)},
                {"euclid", int_json(r.euclid)},
                {"conjectured_complexity", int_json(r.conjectured_complexity)},
                {"gluing_matrix", to_json(r.gluing_matrix)},
                {"twist_distance", int_json(r.twist_distance)},
                {"spine_vertices", int_json(r.spine_vertices)},
                {"special_small", r.special_small}};
}
inline LensReport lens_report_from_json(const json& j) {
    LensReport r;
    r.p = int_from_json(j.at("p"));
    r.q = int_from_json(j.at("q"));
    r.canonical_q = int_from_json(j.at("canonical_q"));
    r.euclid = int_from_json(j.at("euclid"));
    r.conjectured_complexity = int_from_json(j.at("conjectured_complexity"));
    r.gluing_matrix = mat_from_json(j.at("gluing_matrix"));
    r.twist_distance = int_from_json(j.at("twist_distance"));
    r.spine_vertices = int_from_json(j.at("spine_vertices"));
    r.special_small = j.at("special_small").get<bool>();
    return r;
}

} // namespace hexflip

#pragma once

#include <nlohmann/json.hpp>

#include "extweyl/absorder.hpp"
#include "extweyl/diagram.hpp"
#include "extweyl/group.hpp"
#include "extweyl/hurwitz.hpp"
#include "extweyl/rootsys.hpp"

namespace extweyl {

using json = nlohmann::json;

inline json to_json(const DiagramSpec& spec) { return json{{"arms", spec.arms}}; }

inline DiagramSpec diagram_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("arms") || !j["arms"].is_array())
        throw ValidationError("diagram spec must be an object with an \"arms\" array");
    DiagramSpec spec;
    for (const auto& v : j["arms"]) {
        if (!v.is_number_integer()) throw ValidationError("arm lengths must be integers");
        spec.arms.push_back(v.get<int>());
    }
    spec.validate();
    return spec;
}

inline json to_json(const RootSetSlice& slice) {
    return json{{"height_bound", slice.height_bound},
                {"complete", slice.complete},
                {"roots", slice.roots}};
}

inline json to_json(const Reflection& r) { return json{{"root", r.proj_root}, {"k", r.k}}; }

inline Reflection reflection_from_json(const Space& space, const json& j) {
    if (!j.is_object() || !j.contains("root") || !j.contains("k"))
        throw ValidationError("reflection must have \"root\" and \"k\"");
    Reflection r;
    r.proj_root = j["root"].get<Vec>();
    r.k = j["k"].get<Int>();
    space.check_proj_dim(r.proj_root);
    // Re-canonicalize through the root vector to validate the input.
    return canonical_reflection(space, reflection_root(space, r));
}

inline json to_json(const Factorization& f) {
    json tuple = json::array();
    for (const Reflection& t : f.tuple) tuple.push_back(to_json(t));
    return json{{"tuple", tuple}};
}

inline Factorization factorization_from_json(const Space& space, const json& j) {
    if (!j.is_object() || !j.contains("tuple") || !j["tuple"].is_array())
        throw ValidationError("factorization must have a \"tuple\" array");
    std::vector<Reflection> tuple;
    for (const auto& t : j["tuple"]) tuple.push_back(reflection_from_json(space, t));
    return make_factorization(space, std::move(tuple));
}

inline json to_json(const BraidWord& w) { return json{{"letters", w.letters}}; }

inline json to_json(const NormalForm& nf) {
    return json{{"projected", nf.projected}, {"translation", nf.translation}};
}

inline json group_element_to_json(const GroupElement& w) { return json{{"matrix", w}}; }

inline json to_json(const Space& space, const IntervalSlice& slice) {
    json elements = json::array();
    for (const IntervalElement& e : slice.elements)
        elements.push_back(json{{"matrix", e.element},
                                {"witness", to_json(e.witness)},
                                {"prefix_length", e.prefix_length}});
    json covers = json::array();
    for (const auto& [lo, hi] : slice.covers) covers.push_back(json::array({lo, hi}));
    return json{{"budgets", {{"move_budget", slice.move_budget}, {"k_bound", slice.k_bound}}},
                {"complete", slice.complete},
                {"elements", elements},
                {"covers", covers}};
}

} // namespace extweyl

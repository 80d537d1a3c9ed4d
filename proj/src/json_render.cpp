#include "multikit/json_render.hpp"

#include <json.hpp>

namespace multikit {

using nlohmann::json;

namespace {

json names_array(const FiniteSuperring& s, const ElemSet& e) {
    json arr = json::array();
    e.for_each([&](ElementId x) { arr.push_back(s.element_name(x)); });
    return arr;
}

json witness_array(const FiniteSuperring& s, const std::vector<ElementId>& w) {
    json arr = json::array();
    for (ElementId e : w) arr.push_back(s.element_name(e));
    return arr;
}

json axiom_json(const FiniteSuperring& s, const AxiomResult& a) {
    json j;
    j["pass"] = a.pass;
    if (!a.pass) j["witness"] = witness_array(s, a.witness);
    return j;
}

} // namespace

std::string set_names_json(const FiniteSuperring& s, const ElemSet& e) {
    return names_array(s, e).dump();
}

std::string report_json(const FiniteSuperring& s) {
    const ClassReport& r = s.report();
    json j;
    j["flags"] = {
        {"additive_multigroup", r.additive_multigroup},
        {"multiplicative_multimonoid", r.multiplicative_multimonoid},
        {"multiring", r.multiring},
        {"hyperring", r.hyperring},
        {"superring", r.superring},
        {"full", r.full},
        {"superdomain", r.superdomain},
        {"quasi_superfield", r.quasi_superfield},
        {"superfield", r.superfield},
    };
    json ax;
    ax["add_m1"] = axiom_json(s, r.add_m1);
    ax["add_m2"] = axiom_json(s, r.add_m2);
    ax["add_m3"] = axiom_json(s, r.add_m3);
    ax["add_m4"] = axiom_json(s, r.add_m4);
    ax["mul_m3"] = axiom_json(s, r.mul_m3);
    ax["mul_m4"] = axiom_json(s, r.mul_m4);
    ax["mul_unit"] = axiom_json(s, r.mul_unit);
    ax["mul_single_valued"] = axiom_json(s, r.mul_single_valued);
    ax["absorbing"] = axiom_json(s, r.absorbing);
    ax["weak_distrib"] = axiom_json(s, r.weak_distrib);
    ax["sign_rule"] = axiom_json(s, r.sign_rule);
    ax["distrib_equality"] = axiom_json(s, r.distrib_equality);
    if (!r.distrib_equality.pass) {
        ax["distrib_equality"]["lhs"] = names_array(s, r.distrib_lhs);
        ax["distrib_equality"]["rhs"] = names_array(s, r.distrib_rhs);
    }
    ax["nontrivial"] = axiom_json(s, r.nontrivial);
    ax["no_zero_divisors"] = axiom_json(s, r.no_zero_divisors);
    ax["invertibility"] = axiom_json(s, r.invertibility);
    if (r.mul_inverse_m1) ax["mul_inverse_m1"] = axiom_json(s, *r.mul_inverse_m1);
    j["axioms"] = ax;
    j["implications_ok"] = r.implications_ok;
    j["structure"] = s.name();
    return j.dump(2) + "\n";
}

std::string structure_json(const FiniteSuperring& s) {
    json j;
    j["name"] = s.name();
    json els = json::array();
    for (ElementId e = 0; e < s.size(); ++e) els.push_back(s.element_name(e));
    j["elements"] = els;
    j["zero"] = s.element_name(s.zero());
    j["one"] = s.element_name(s.one());
    json neg = json::array();
    for (ElementId e = 0; e < s.size(); ++e)
        neg.push_back({s.element_name(e), s.element_name(s.neg(e))});
    j["neg"] = neg;
    json sum = json::array(), prod = json::array();
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = a; b < s.size(); ++b) {
            sum.push_back({{"a", s.element_name(a)},
                           {"b", s.element_name(b)},
                           {"value", names_array(s, s.sum(a, b))}});
            prod.push_back({{"a", s.element_name(a)},
                            {"b", s.element_name(b)},
                            {"value", names_array(s, s.prod(a, b))}});
        }
    j["sum"] = sum;
    j["prod"] = prod;
    return j.dump(2) + "\n";
}

std::string ideals_json(const FiniteSuperring& s, const std::vector<IdealSet>& ideals) {
    json arr = json::array();
    for (const IdealSet& i : ideals)
        arr.push_back({{"elements", names_array(s, i.elements)},
                       {"prime", i.prime},
                       {"strongly_prime", i.strongly_prime},
                       {"maximal", i.maximal}});
    json j;
    j["structure"] = s.name();
    j["ideals"] = arr;
    return j.dump(2) + "\n";
}

std::string morphism_json(const MorphismTable& m) {
    const MorphismVerdict v = classify_map(m);
    json j;
    j["domain"] = m.domain()->name();
    j["codomain"] = m.codomain()->name();
    j["map"] = m.to_string();
    const char* cls = v.cls == MorphismClass::FullMorphism ? "full-morphism"
                      : v.cls == MorphismClass::Morphism   ? "morphism"
                                                           : "not-morphism";
    j["classification"] = cls;
    j["injective"] = v.injective;
    j["surjective"] = v.surjective;
    if (v.cls == MorphismClass::NotMorphism) {
        j["failed_condition"] = v.failed_condition;
        j["witness"] = witness_array(*m.domain(), v.witness);
    }
    if (v.injective) {
        const ExtensionKind k = extension_kind(m);
        j["extension_kind"] = k == ExtensionKind::Full        ? "full"
                              : k == ExtensionKind::Extension ? "extension"
                                                              : "proto";
    }
    return j.dump(2) + "\n";
}

std::string tower_json(const Tower& t) {
    json j;
    j["base"] = t.base->name();
    json steps = json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const ExtensionStep& st = t.steps[i];
        const bool emb_full =
            classify_map(st.embedding).cls == MorphismClass::FullMorphism;
        const bool comp_full =
            classify_map(t.composites[i]).cls == MorphismClass::FullMorphism;
        steps.push_back({{"modulus", poly_to_string(st.modulus)},
                         {"root", st.top->element_name(st.root)},
                         {"top_size", st.top->size()},
                         {"embedding_full", emb_full},
                         {"composite_full", comp_full}});
    }
    j["steps"] = steps;
    j["top"] = t.top->name();
    j["top_size"] = t.top->size();
    const char* status = "";
    switch (t.status) {
        case TowerStatus::ClosedUpToBound: status = "closed-up-to-bound"; break;
        case TowerStatus::StepBudgetExhausted: status = "step-budget-exhausted"; break;
        case TowerStatus::CarrierBoundReached: status = "carrier-bound-reached"; break;
        case TowerStatus::NoIrreducibleCandidate: status = "no-irreducible-candidate"; break;
    }
    j["status"] = status;
    return j.dump(2) + "\n";
}

} // namespace multikit

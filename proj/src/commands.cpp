#include "multikit/commands.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "multikit/conformance.hpp"
#include "multikit/extensions.hpp"
#include "multikit/ideals.hpp"
#include "multikit/json_render.hpp"
#include "multikit/quotients.hpp"
#include "multikit/structures.hpp"

namespace multikit {

using nlohmann::json;

namespace {

class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

bool want_json(const std::string& format) {
    if (format == "json") return true;
    if (format == "text" || format.empty()) return false;
    throw UsageError("unknown format '" + format + "' (expected text or json)");
}

QuotientMode parse_mode(const std::string& mode) {
    if (mode == "strict" || mode.empty()) return QuotientMode::Strict;
    if (mode == "saturated") return QuotientMode::Saturated;
    throw UsageError("unknown mode '" + mode + "' (expected strict or saturated)");
}

template <typename F>
CommandResult guarded(F&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        return {2, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace

SuperringPtr resolve_structure(const std::string& ref) {
    constexpr const char* prefix = "builtin:";
    if (ref.rfind(prefix, 0) == 0) {
        const std::string name = ref.substr(8);
        SuperringPtr s = builtin_structure(name);
        if (!s) throw UsageError("unknown builtin structure '" + name + "'");
        return s;
    }
    std::ifstream in(ref, std::ios::binary);
    if (!in) throw UsageError("cannot open structure file '" + ref + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_structure(text.str());
}

CommandResult cmd_validate(const std::string& ref, const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        if (js) return {0, report_json(*s), ""};
        const ClassReport& r = s->report();
        std::ostringstream out;
        out << "structure " << s->name() << " (" << s->size() << " elements)\n";
        auto flag = [&](const char* name, bool v) { out << "  " << name << ": " << (v ? "pass" : "fail") << "\n"; };
        flag("additive multigroup", r.additive_multigroup);
        flag("multiplicative multimonoid", r.multiplicative_multimonoid);
        flag("multiring", r.multiring);
        flag("hyperring", r.hyperring);
        flag("superring", r.superring);
        flag("full", r.full);
        flag("superdomain", r.superdomain);
        flag("quasi-superfield", r.quasi_superfield);
        flag("superfield", r.superfield);
        if (!r.distrib_equality.pass) {
            out << "  distributivity equality fails at (";
            for (std::size_t i = 0; i < r.distrib_equality.witness.size(); ++i)
                out << (i ? "," : "") << s->element_name(r.distrib_equality.witness[i]);
            out << "): c(a+b) = {" << s->set_to_string(r.distrib_lhs) << "} vs ca+cb = {"
                << s->set_to_string(r.distrib_rhs) << "}\n";
        }
        return {0, out.str(), ""};
    });
}

CommandResult cmd_char(const std::string& ref, const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const unsigned c = characteristic(*s);
        if (js) {
            json j;
            j["structure"] = s->name();
            j["characteristic"] = c;
            return {0, j.dump(2) + "\n", ""};
        }
        return {0, std::to_string(c) + "\n", ""};
    });
}

CommandResult cmd_table(const std::string& ref, const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        return {0, js ? structure_json(*s) : serialize_structure(*s), ""};
    });
}

CommandResult cmd_ideals(const std::string& ref, unsigned max_carrier,
                         const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const auto ideals = enumerate_ideals(*s, max_carrier);
        if (js) return {0, ideals_json(*s, ideals), ""};
        std::ostringstream out;
        for (const IdealSet& i : ideals) {
            out << "{" << s->set_to_string(i.elements) << "}";
            if (i.prime) out << " prime";
            if (i.strongly_prime) out << " strongly-prime";
            if (i.maximal) out << " maximal";
            out << "\n";
        }
        return {0, out.str(), ""};
    });
}

CommandResult cmd_morphism(const std::string& dom_ref, const std::string& cod_ref,
                           const std::string& map_text, const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr dom = resolve_structure(dom_ref);
        const SuperringPtr cod = resolve_structure(cod_ref);
        const MorphismTable m = parse_morphism(dom, cod, map_text);
        if (js) return {0, morphism_json(m), ""};
        const MorphismVerdict v = classify_map(m);
        std::ostringstream out;
        out << (v.cls == MorphismClass::FullMorphism ? "full-morphism"
                : v.cls == MorphismClass::Morphism   ? "morphism"
                                                     : "not-morphism");
        if (v.cls == MorphismClass::NotMorphism) {
            out << " (fails " << v.failed_condition << " at";
            for (ElementId w : v.witness) out << " " << dom->element_name(w);
            out << ")";
        }
        out << (v.injective ? ", injective" : ", not injective")
            << (v.surjective ? ", surjective" : ", not surjective") << "\n";
        if (v.injective) {
            const ExtensionKind k = extension_kind(m);
            out << "extension kind: "
                << (k == ExtensionKind::Full        ? "full"
                    : k == ExtensionKind::Extension ? "extension"
                                                    : "proto")
                << "\n";
        }
        return {0, out.str(), ""};
    });
}

CommandResult cmd_iso(const std::string& a_ref, const std::string& b_ref,
                      const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr a = resolve_structure(a_ref);
        const SuperringPtr b = resolve_structure(b_ref);
        const auto iso = find_isomorphism(a, b);
        if (js) {
            json j;
            j["a"] = a->name();
            j["b"] = b->name();
            j["found"] = iso.has_value();
            if (iso) j["map"] = iso->to_string();
            return {0, j.dump(2) + "\n", ""};
        }
        if (iso) return {0, "isomorphic: " + iso->to_string() + "\n", ""};
        return {0, "none\n", ""};
    });
}

CommandResult cmd_poly_eval(const std::string& ref, const std::string& poly,
                            const std::string& point, const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const Poly f = parse_poly(s, poly);
        const auto alpha = s->find_element(point);
        if (!alpha) throw UsageError("unknown element '" + point + "'");
        const ElemSet v = evaluate(f, *alpha, s);
        if (js) {
            json j;
            j["structure"] = s->name();
            j["poly"] = poly_to_string(f);
            j["point"] = point;
            j["value"] = json::parse(set_names_json(*s, v));
            return {0, j.dump(2) + "\n", ""};
        }
        return {0, "{" + s->set_to_string(v) + "}\n", ""};
    });
}

CommandResult cmd_poly_mul(const std::string& ref, const std::string& f, const std::string& g,
                           const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const CoeffEnvelope e = poly_prod(parse_poly(s, f), parse_poly(s, g));
        if (js) {
            json sets = json::array();
            for (std::size_t i = 0; i < e.length(); ++i)
                sets.push_back(json::parse(set_names_json(*s, e.at(i))));
            json j;
            j["structure"] = s->name();
            j["envelope"] = sets;
            j["member_count"] = e.member_count();
            return {0, j.dump(2) + "\n", ""};
        }
        std::ostringstream out;
        for (std::size_t i = 0; i < e.length(); ++i)
            out << "c" << i << ": {" << s->set_to_string(e.at(i)) << "}\n";
        out << "members: " << e.member_count() << "\n";
        return {0, out.str(), ""};
    });
}

CommandResult cmd_poly_div(const std::string& ref, const std::string& f, const std::string& g,
                           const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const Poly fp = parse_poly(s, f);
        const Poly gp = parse_poly(s, g);
        const Division d = euclid_divide(fp, gp);
        const bool verified = member(fp, envelope_add_poly(poly_prod(d.q, gp), d.r));
        if (js) {
            json j;
            j["structure"] = s->name();
            j["q"] = poly_to_string(d.q);
            j["r"] = poly_to_string(d.r);
            j["verified"] = verified;
            return {verified ? 0 : 1, j.dump(2) + "\n", ""};
        }
        std::ostringstream out;
        out << "q = " << poly_to_string(d.q) << "\nr = " << poly_to_string(d.r)
            << "\nverified: " << (verified ? "yes" : "no") << "\n";
        return {verified ? 0 : 1, out.str(), ""};
    });
}

CommandResult cmd_poly_roots(const std::string& ref, const std::string& f,
                             const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const Poly fp = parse_poly(s, f);
        const ElemSet r = roots(fp, s);
        std::optional<ElemSet> eff;
        if (s->report().superdomain) eff = effective_roots(fp, s);
        if (js) {
            json j;
            j["structure"] = s->name();
            j["poly"] = poly_to_string(fp);
            j["roots"] = json::parse(set_names_json(*s, r));
            if (eff) j["effective_roots"] = json::parse(set_names_json(*s, *eff));
            return {0, j.dump(2) + "\n", ""};
        }
        std::ostringstream out;
        out << "roots: {" << s->set_to_string(r) << "}\n";
        if (eff) out << "effective roots: {" << s->set_to_string(*eff) << "}\n";
        return {0, out.str(), ""};
    });
}

CommandResult cmd_irred(const std::string& ref, const std::string& p, const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const Poly pp = parse_poly(s, p);
        const IrredResult r = is_irreducible(pp);
        if (js) {
            json j;
            j["structure"] = s->name();
            j["poly"] = poly_to_string(pp);
            j["irreducible"] = r.irreducible;
            j["secondary_irreducible"] = r.secondary_irreducible;
            if (r.factor_witness)
                j["factor_witness"] = {poly_to_string(r.factor_witness->first),
                                       poly_to_string(r.factor_witness->second)};
            return {0, j.dump(2) + "\n", ""};
        }
        std::ostringstream out;
        out << (r.irreducible ? "irreducible" : "reducible");
        if (r.factor_witness)
            out << " (member of (" << poly_to_string(r.factor_witness->first) << ")*("
                << poly_to_string(r.factor_witness->second) << "))";
        out << "; divisor-definition verdict: "
            << (r.secondary_irreducible ? "irreducible" : "reducible") << "\n";
        return {0, out.str(), ""};
    });
}

namespace {

json quotient_summary(const QuotientField& q) {
    json j;
    j["base"] = q.base()->name();
    j["modulus"] = poly_to_string(q.modulus());
    j["mode"] = q.mode() == QuotientMode::Strict ? "strict" : "saturated";
    if (q.mode() == QuotientMode::Saturated) j["saturation_degree"] = q.saturation_degree();
    j["classes"] = q.class_count();
    j["embedding_full"] = q.embedding_full();
    j["superfield"] = q.structure()->report().superfield;
    return j;
}

} // namespace

CommandResult cmd_quotient(const std::string& ref, const std::string& p, const std::string& mode,
                           unsigned sat_degree, const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const QuotientField q = make_quotient(s, parse_poly(s, p), parse_mode(mode), sat_degree);
        if (js) {
            json j = quotient_summary(q);
            j["structure"] = json::parse(structure_json(*q.structure()));
            return {0, j.dump(2) + "\n", ""};
        }
        return {0, serialize_structure(*q.structure()), ""};
    });
}

CommandResult cmd_extend(const std::string& ref, const std::string& p, const std::string& mode,
                         const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const Poly pp = parse_poly(s, p);
        const QuotientField q = make_quotient(s, pp, parse_mode(mode));
        const ExtensionContext ctx{q.base(), q.structure(), q.embedding()};
        const ElementId root = adjoined_root(q);
        const bool root_ok =
            evaluate(pp, root, q.structure(), &q.embedding()).contains(q.structure()->zero());
        const AlmostFullResult af =
            is_almost_full(ctx, root, static_cast<unsigned>(2 * pp.degree()));
        if (js) {
            json j = quotient_summary(q);
            j["root"] = q.structure()->element_name(root);
            j["root_check"] = root_ok;
            j["almost_full"] = af.pass;
            return {0, j.dump(2) + "\n", ""};
        }
        std::ostringstream out;
        out << "extension " << q.structure()->name() << " with " << q.class_count()
            << " classes\n"
            << "embedding: " << (q.embedding_full() ? "full" : "not full") << "\n"
            << "root " << q.structure()->element_name(root) << " of " << poly_to_string(pp)
            << ": " << (root_ok ? "verified" : "failed") << "\n"
            << "almost full: " << (af.pass ? "yes" : "no") << "\n";
        return {0, out.str(), ""};
    });
}

CommandResult cmd_closure(const std::string& ref, unsigned max_degree, unsigned max_steps,
                          const std::string& format, const std::string& manifest_dir) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const SuperringPtr s = resolve_structure(ref);
        const Tower t = closure_tower(s, max_degree, max_steps);
        if (!manifest_dir.empty()) {
            namespace fs = std::filesystem;
            fs::create_directories(manifest_dir);
            const std::string manifest =
                tower_manifest(t, [&](const std::string& file, const std::string& content) {
                    std::ofstream out(fs::path(manifest_dir) / file, std::ios::binary);
                    out << content;
                });
            std::ofstream out(fs::path(manifest_dir) / "manifest.txt", std::ios::binary);
            out << manifest;
        }
        if (js) return {0, tower_json(t), ""};
        std::ostringstream out;
        for (std::size_t i = 0; i < t.steps.size(); ++i)
            out << "step " << (i + 1) << ": adjoin " << poly_to_string(t.steps[i].modulus)
                << " -> " << t.steps[i].top->size() << " elements\n";
        out << serialize_structure(*t.top);
        return {0, out.str(), ""};
    });
}

CommandResult cmd_conformance(const std::string& format) {
    return guarded([&]() -> CommandResult {
        const bool js = want_json(format);
        const ConformanceReport r = run_conformance();
        return {r.all_match_expected() ? 0 : 1,
                js ? conformance_json(r) : conformance_text(r), ""};
    });
}

} // namespace multikit

#include "multikit.h"

#include <cstring>
#include <string>

#include "multikit/commands.hpp"
#include "multikit/conformance.hpp"
#include "multikit/extensions.hpp"
#include "multikit/ideals.hpp"
#include "multikit/json_render.hpp"
#include "multikit/quotients.hpp"
#include "multikit/structures.hpp"

using namespace multikit;

// Opaque handle: owns a shared reference to an immutable structure.
struct mk_structure {
    SuperringPtr ptr;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
mk_status guard(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return MK_ERR_PARSE;
    } catch (const LimitError& e) {
        g_last_error = e.what();
        return MK_ERR_LIMIT;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return MK_ERR_DOMAIN;
    } catch (const Error& e) {
        g_last_error = e.what();
        return MK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MK_ERR_INTERNAL;
    }
}

mk_status require(bool cond, const char* msg) {
    if (cond) return MK_OK;
    g_last_error = msg;
    return MK_ERR_USAGE;
}

mk_status run_command(const CommandResult& r, char** out_text, int* exit_code) {
    if (out_text) *out_text = dup_string(r.output.empty() ? r.error : r.output);
    if (exit_code) *exit_code = r.exit_code;
    if (r.exit_code != 0 && !r.error.empty()) g_last_error = r.error;
    return MK_OK;
}

} // namespace

extern "C" {

const char* mk_version(void) { return "0.1.0"; }

const char* mk_last_error(void) { return g_last_error.c_str(); }

void mk_string_free(char* s) { delete[] s; }

void mk_structure_free(mk_structure* s) { delete s; }

mk_status mk_structure_builtin(const char* name, mk_structure** out) {
    if (require(name && out, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        SuperringPtr s = builtin_structure(name);
        if (!s) {
            g_last_error = std::string("unknown builtin structure '") + name + "'";
            return MK_ERR_USAGE;
        }
        *out = new mk_structure{std::move(s)};
        return MK_OK;
    });
}

mk_status mk_structure_parse(const char* text, mk_structure** out) {
    if (require(text && out, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        *out = new mk_structure{parse_structure(text)};
        return MK_OK;
    });
}

mk_status mk_structure_serialize(const mk_structure* s, char** out_text) {
    if (require(s && out_text, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        *out_text = dup_string(serialize_structure(*s->ptr));
        return MK_OK;
    });
}

mk_status mk_structure_size(const mk_structure* s, unsigned* out) {
    if (require(s && out, "null argument") != MK_OK) return MK_ERR_USAGE;
    *out = s->ptr->size();
    return MK_OK;
}

mk_status mk_structure_name(const mk_structure* s, char** out_text) {
    if (require(s && out_text, "null argument") != MK_OK) return MK_ERR_USAGE;
    *out_text = dup_string(s->ptr->name());
    return MK_OK;
}

mk_status mk_validate_json(const mk_structure* s, char** out_json) {
    if (require(s && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        *out_json = dup_string(report_json(*s->ptr));
        return MK_OK;
    });
}

mk_status mk_characteristic(const mk_structure* s, unsigned* out) {
    if (require(s && out, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        *out = characteristic(*s->ptr);
        return MK_OK;
    });
}

mk_status mk_ideals_json(const mk_structure* s, unsigned max_carrier, char** out_json) {
    if (require(s && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        *out_json = dup_string(ideals_json(*s->ptr, enumerate_ideals(*s->ptr, max_carrier)));
        return MK_OK;
    });
}

mk_status mk_classify_map_json(const mk_structure* dom, const mk_structure* cod,
                               const char* map_text, char** out_json) {
    if (require(dom && cod && map_text && out_json, "null argument") != MK_OK)
        return MK_ERR_USAGE;
    return guard([&] {
        *out_json = dup_string(morphism_json(parse_morphism(dom->ptr, cod->ptr, map_text)));
        return MK_OK;
    });
}

mk_status mk_find_isomorphism(const mk_structure* a, const mk_structure* b, int* found,
                              char** out_map) {
    if (require(a && b && found, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const auto iso = find_isomorphism(a->ptr, b->ptr);
        *found = iso.has_value() ? 1 : 0;
        if (out_map) *out_map = dup_string(iso ? iso->to_string() : "");
        return MK_OK;
    });
}

mk_status mk_poly_eval_json(const mk_structure* s, const char* poly, const char* point,
                            char** out_json) {
    if (require(s && poly && point && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const Poly f = parse_poly(s->ptr, poly);
        const auto alpha = s->ptr->find_element(point);
        if (!alpha) {
            g_last_error = std::string("unknown element '") + point + "'";
            return MK_ERR_USAGE;
        }
        const ElemSet v = evaluate(f, *alpha, s->ptr);
        *out_json = dup_string(set_names_json(*s->ptr, v) + "\n");
        return MK_OK;
    });
}

mk_status mk_poly_mul_json(const mk_structure* s, const char* f, const char* g,
                           char** out_json) {
    if (require(s && f && g && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const CoeffEnvelope e = poly_prod(parse_poly(s->ptr, f), parse_poly(s->ptr, g));
        std::string out = "[";
        for (std::size_t i = 0; i < e.length(); ++i) {
            if (i) out += ",";
            out += set_names_json(*s->ptr, e.at(i));
        }
        out += "]\n";
        *out_json = dup_string(out);
        return MK_OK;
    });
}

mk_status mk_poly_div_json(const mk_structure* s, const char* f, const char* g,
                           char** out_json) {
    if (require(s && f && g && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const Poly fp = parse_poly(s->ptr, f);
        const Poly gp = parse_poly(s->ptr, g);
        const Division d = euclid_divide(fp, gp);
        *out_json = dup_string(std::string("{\"q\":\"") + poly_to_string(d.q) + "\",\"r\":\"" +
                               poly_to_string(d.r) + "\"}\n");
        return MK_OK;
    });
}

mk_status mk_poly_roots_json(const mk_structure* s, const char* f, char** out_json) {
    if (require(s && f && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const ElemSet r = roots(parse_poly(s->ptr, f), s->ptr);
        *out_json = dup_string(set_names_json(*s->ptr, r) + "\n");
        return MK_OK;
    });
}

mk_status mk_irreducible_json(const mk_structure* s, const char* p, char** out_json) {
    if (require(s && p && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const IrredResult r = is_irreducible(parse_poly(s->ptr, p));
        std::string out = std::string("{\"irreducible\":") +
                          (r.irreducible ? "true" : "false") + "}\n";
        *out_json = dup_string(out);
        return MK_OK;
    });
}

mk_status mk_quotient(const mk_structure* s, const char* p, const char* mode,
                      unsigned sat_degree, mk_structure** out) {
    if (require(s && p && out, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const QuotientMode m =
            (mode && std::string(mode) == "saturated") ? QuotientMode::Saturated
                                                       : QuotientMode::Strict;
        QuotientField q = make_quotient(s->ptr, parse_poly(s->ptr, p), m, sat_degree);
        *out = new mk_structure{q.structure()};
        return MK_OK;
    });
}

mk_status mk_quotient_json(const mk_structure* s, const char* p, const char* mode,
                           unsigned sat_degree, char** out_json) {
    if (require(s && p && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const QuotientMode m =
            (mode && std::string(mode) == "saturated") ? QuotientMode::Saturated
                                                       : QuotientMode::Strict;
        QuotientField q = make_quotient(s->ptr, parse_poly(s->ptr, p), m, sat_degree);
        *out_json = dup_string(structure_json(*q.structure()));
        return MK_OK;
    });
}

mk_status mk_extend_json(const mk_structure* s, const char* p, const char* mode,
                         char** out_json) {
    if (require(s && p && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const QuotientMode m =
            (mode && std::string(mode) == "saturated") ? QuotientMode::Saturated
                                                       : QuotientMode::Strict;
        QuotientField q = make_quotient(s->ptr, parse_poly(s->ptr, p), m);
        const ExtensionContext ctx{q.base(), q.structure(), q.embedding()};
        const ElementId root = adjoined_root(q);
        const AlmostFullResult af =
            is_almost_full(ctx, root, static_cast<unsigned>(2 * q.modulus().degree()));
        std::string out = std::string("{\"classes\":") + std::to_string(q.class_count()) +
                          ",\"embedding_full\":" + (q.embedding_full() ? "true" : "false") +
                          ",\"almost_full\":" + (af.pass ? "true" : "false") + "}\n";
        *out_json = dup_string(out);
        return MK_OK;
    });
}

mk_status mk_closure_json(const mk_structure* s, unsigned max_degree, unsigned max_steps,
                          char** out_json, mk_structure** out_top) {
    if (require(s && out_json, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const Tower t = closure_tower(s->ptr, max_degree, max_steps);
        *out_json = dup_string(tower_json(t));
        if (out_top) *out_top = new mk_structure{t.top};
        return MK_OK;
    });
}

mk_status mk_conformance_json(char** out_json, int* all_expected) {
    if (require(out_json != nullptr, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const ConformanceReport r = run_conformance();
        *out_json = dup_string(conformance_json(r));
        if (all_expected) *all_expected = r.all_match_expected() ? 1 : 0;
        return MK_OK;
    });
}

mk_status mk_conformance_text(char** out_text, int* all_expected) {
    if (require(out_text != nullptr, "null argument") != MK_OK) return MK_ERR_USAGE;
    return guard([&] {
        const ConformanceReport r = run_conformance();
        *out_text = dup_string(conformance_text(r));
        if (all_expected) *all_expected = r.all_match_expected() ? 1 : 0;
        return MK_OK;
    });
}

mk_status mk_run_validate(const char* ref, const char* format, char** out_text, int* exit_code) {
    if (require(ref && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_validate(ref, format), out_text, exit_code);
}

mk_status mk_run_char(const char* ref, const char* format, char** out_text, int* exit_code) {
    if (require(ref && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_char(ref, format), out_text, exit_code);
}

mk_status mk_run_table(const char* ref, const char* format, char** out_text, int* exit_code) {
    if (require(ref && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_table(ref, format), out_text, exit_code);
}

mk_status mk_run_ideals(const char* ref, unsigned max_carrier, const char* format,
                        char** out_text, int* exit_code) {
    if (require(ref && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_ideals(ref, max_carrier, format), out_text, exit_code);
}

mk_status mk_run_morphism(const char* dom_ref, const char* cod_ref, const char* map_text,
                          const char* format, char** out_text, int* exit_code) {
    if (require(dom_ref && cod_ref && map_text && format, "null argument") != MK_OK)
        return MK_ERR_USAGE;
    return run_command(cmd_morphism(dom_ref, cod_ref, map_text, format), out_text, exit_code);
}

mk_status mk_run_iso(const char* a_ref, const char* b_ref, const char* format, char** out_text,
                     int* exit_code) {
    if (require(a_ref && b_ref && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_iso(a_ref, b_ref, format), out_text, exit_code);
}

mk_status mk_run_poly_eval(const char* ref, const char* poly, const char* point,
                           const char* format, char** out_text, int* exit_code) {
    if (require(ref && poly && point && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_poly_eval(ref, poly, point, format), out_text, exit_code);
}

mk_status mk_run_poly_mul(const char* ref, const char* f, const char* g, const char* format,
                          char** out_text, int* exit_code) {
    if (require(ref && f && g && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_poly_mul(ref, f, g, format), out_text, exit_code);
}

mk_status mk_run_poly_div(const char* ref, const char* f, const char* g, const char* format,
                          char** out_text, int* exit_code) {
    if (require(ref && f && g && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_poly_div(ref, f, g, format), out_text, exit_code);
}

mk_status mk_run_poly_roots(const char* ref, const char* f, const char* format, char** out_text,
                            int* exit_code) {
    if (require(ref && f && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_poly_roots(ref, f, format), out_text, exit_code);
}

mk_status mk_run_irred(const char* ref, const char* p, const char* format, char** out_text,
                       int* exit_code) {
    if (require(ref && p && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_irred(ref, p, format), out_text, exit_code);
}

mk_status mk_run_quotient(const char* ref, const char* p, const char* mode, unsigned sat_degree,
                          const char* format, char** out_text, int* exit_code) {
    if (require(ref && p && mode && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_quotient(ref, p, mode, sat_degree, format), out_text, exit_code);
}

mk_status mk_run_extend(const char* ref, const char* p, const char* mode, const char* format,
                        char** out_text, int* exit_code) {
    if (require(ref && p && mode && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_extend(ref, p, mode, format), out_text, exit_code);
}

mk_status mk_run_closure(const char* ref, unsigned max_degree, unsigned max_steps,
                         const char* format, const char* manifest_dir, char** out_text,
                         int* exit_code) {
    if (require(ref && format, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(
        cmd_closure(ref, max_degree, max_steps, format, manifest_dir ? manifest_dir : ""),
        out_text, exit_code);
}

mk_status mk_run_conformance(const char* format, char** out_text, int* exit_code) {
    if (require(format != nullptr, "null argument") != MK_OK) return MK_ERR_USAGE;
    return run_command(cmd_conformance(format), out_text, exit_code);
}

} // extern "C"

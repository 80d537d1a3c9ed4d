// multikit command line: thin adapter over the C API. All computation and
// rendering happens in the library; this file only parses arguments and
// moves strings.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <string_view>

#include "multikit.h"

namespace {

struct Output {
    char* text = nullptr;
    int exit_code = 2;
    ~Output() { mk_string_free(text); }

    int flush(mk_status st) {
        if (st != MK_OK) {
            std::fprintf(stderr, "error: %s\n", mk_last_error());
            return st == MK_ERR_USAGE ? 2 : 1;
        }
        if (text && *text) {
            // diagnostics (usage or computation errors) go to stderr, any
            // produced report stays on stdout even when checks failed
            const bool diagnostic =
                exit_code == 2 || std::string_view(text).starts_with("error:") ||
                std::string_view(text).starts_with("usage error:");
            std::fputs(text, diagnostic ? stderr : stdout);
        }
        return exit_code;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multikit: finite structures with multivalued addition and multiplication"};
    app.require_subcommand(1);
    app.fallthrough(); // --format and --seed may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")->capture_default_str();
    unsigned seed = 0;
    app.add_option("--seed", seed, "seed for randomized property runs (reserved)");

    std::string ref, ref2, map_text, poly, poly2, point, mode = "strict", manifest_dir;
    unsigned max_carrier = 12, max_degree = 2, max_steps = 1, sat_degree = 0;

    auto* validate = app.add_subcommand("validate", "classify a structure against the axiom ladder");
    validate->add_option("structure", ref)->required();

    auto* chr = app.add_subcommand("char", "characteristic of a structure");
    chr->add_option("structure", ref)->required();

    auto* table = app.add_subcommand("table", "print the operation tables");
    table->add_option("structure", ref)->required();

    auto* ideals = app.add_subcommand("ideals", "enumerate ideals with spectrum flags");
    ideals->add_option("structure", ref)->required();
    ideals->add_option("--max-carrier", max_carrier, "carrier bound for the powerset scan")
        ->capture_default_str();

    auto* morphism = app.add_subcommand("morphism", "classify a candidate map a:b,c:d,...");
    morphism->add_option("domain", ref)->required();
    morphism->add_option("codomain", ref2)->required();
    morphism->add_option("map", map_text)->required();

    auto* iso = app.add_subcommand("iso", "search for an isomorphism");
    iso->add_option("a", ref)->required();
    iso->add_option("b", ref2)->required();

    auto* poly_cmd = app.add_subcommand("poly", "polynomial operations");
    poly_cmd->require_subcommand(1);
    auto* peval = poly_cmd->add_subcommand("eval", "evaluate at a point");
    peval->add_option("structure", ref)->required();
    peval->add_option("poly", poly)->required();
    peval->add_option("point", point)->required();
    auto* pmul = poly_cmd->add_subcommand("mul", "product envelope");
    pmul->add_option("structure", ref)->required();
    pmul->add_option("f", poly)->required();
    pmul->add_option("g", poly2)->required();
    auto* pdiv = poly_cmd->add_subcommand("div", "division witness (q, r)");
    pdiv->add_option("structure", ref)->required();
    pdiv->add_option("f", poly)->required();
    pdiv->add_option("g", poly2)->required();
    auto* proots = poly_cmd->add_subcommand("roots", "roots and effective roots");
    proots->add_option("structure", ref)->required();
    proots->add_option("f", poly)->required();

    auto* irred = app.add_subcommand("irred", "irreducibility of a polynomial");
    irred->add_option("structure", ref)->required();
    irred->add_option("poly", poly)->required();

    auto* quotient = app.add_subcommand("quotient", "quotient by an irreducible polynomial");
    quotient->add_option("structure", ref)->required();
    quotient->add_option("poly", poly)->required();
    quotient->add_option("--mode", mode, "strict or saturated")->capture_default_str();
    quotient->add_option("--saturation-degree", sat_degree, "0 = default (twice the modulus degree)");

    auto* extend = app.add_subcommand("extend", "adjoin a root: quotient plus extension checks");
    extend->add_option("structure", ref)->required();
    extend->add_option("poly", poly)->required();
    extend->add_option("--mode", mode, "strict or saturated")->capture_default_str();

    auto* closure = app.add_subcommand("closure", "bounded algebraic-closure tower");
    closure->add_option("structure", ref)->required();
    closure->add_option("--max-degree", max_degree)->capture_default_str();
    closure->add_option("--max-steps", max_steps)->capture_default_str();
    closure->add_option("--manifest-dir", manifest_dir, "write step tables and a manifest here");

    auto* conformance =
        app.add_subcommand("conformance", "re-derive the registered worked-example claims");

    CLI11_PARSE(app, argc, argv);
    (void)seed;

    Output out;
    mk_status st = MK_ERR_USAGE;
    const char* fmt = format.c_str();

    if (*validate) st = mk_run_validate(ref.c_str(), fmt, &out.text, &out.exit_code);
    else if (*chr) st = mk_run_char(ref.c_str(), fmt, &out.text, &out.exit_code);
    else if (*table) st = mk_run_table(ref.c_str(), fmt, &out.text, &out.exit_code);
    else if (*ideals) st = mk_run_ideals(ref.c_str(), max_carrier, fmt, &out.text, &out.exit_code);
    else if (*morphism)
        st = mk_run_morphism(ref.c_str(), ref2.c_str(), map_text.c_str(), fmt, &out.text,
                             &out.exit_code);
    else if (*iso) st = mk_run_iso(ref.c_str(), ref2.c_str(), fmt, &out.text, &out.exit_code);
    else if (*peval)
        st = mk_run_poly_eval(ref.c_str(), poly.c_str(), point.c_str(), fmt, &out.text,
                              &out.exit_code);
    else if (*pmul)
        st = mk_run_poly_mul(ref.c_str(), poly.c_str(), poly2.c_str(), fmt, &out.text,
                             &out.exit_code);
    else if (*pdiv)
        st = mk_run_poly_div(ref.c_str(), poly.c_str(), poly2.c_str(), fmt, &out.text,
                             &out.exit_code);
    else if (*proots)
        st = mk_run_poly_roots(ref.c_str(), poly.c_str(), fmt, &out.text, &out.exit_code);
    else if (*irred)
        st = mk_run_irred(ref.c_str(), poly.c_str(), fmt, &out.text, &out.exit_code);
    else if (*quotient)
        st = mk_run_quotient(ref.c_str(), poly.c_str(), mode.c_str(), sat_degree, fmt, &out.text,
                             &out.exit_code);
    else if (*extend)
        st = mk_run_extend(ref.c_str(), poly.c_str(), mode.c_str(), fmt, &out.text,
                           &out.exit_code);
    else if (*closure)
        st = mk_run_closure(ref.c_str(), max_degree, max_steps, fmt,
                            manifest_dir.empty() ? nullptr : manifest_dir.c_str(), &out.text,
                            &out.exit_code);
    else if (*conformance) st = mk_run_conformance(fmt, &out.text, &out.exit_code);

    return out.flush(st);
}

// Acceptance suite: every criterion prints one PASS/FAIL line and the whole
// binary fails if any criterion fails. Budgets are wall-clock seconds.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <map>

#include "multikit/conformance.hpp"
#include "support.hpp"

using namespace multikit;
using namespace mkt;

namespace {

class Criterion {
public:
    Criterion(int id, const char* summary, double budget_seconds)
        : id_(id), summary_(summary), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void note(const std::string& text) { notes_ += "; " + text; }

    void finish(bool ok) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::printf("ACCEPTANCE %2d %s: %s (%.2fs, budget %.0fs)%s\n", id_,
                    ok ? "PASS" : "FAIL", summary_, secs, budget_, notes_.c_str());
        std::fflush(stdout);
        CHECK_MESSAGE(ok, "criterion ", id_, " failed: ", summary_);
        CHECK_MESSAGE(secs < budget_, "criterion ", id_, " exceeded its time budget");
    }

private:
    int id_;
    const char* summary_;
    double budget_;
    std::string notes_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

TEST_CASE("1: builtin classification") {
    Criterion cr(1, "builtin classification matches the published verdicts", 1);
    bool ok = true;
    for (const char* name : {"krasner", "q2", "h3", "h5", "h7"})
        ok = ok && builtin_structure(name)->report().superfield;
    ok = ok && equal_elementwise(*builtin_structure("x1"), *builtin_structure("q2"));
    const SuperringPtr x2 = builtin_structure("x2");
    const ClassReport& rx2 = x2->report();
    ok = ok && rx2.multiring && !rx2.hyperring;
    ok = ok && rx2.distrib_lhs == set_of(*x2, {"-2", "0", "2"});
    const SuperringPtr f4 = make_strict(4);
    ok = ok && f4->report().superfield && f4->report().hyperring && f4->report().full;
    cr.finish(ok);
}

TEST_CASE("2: nine-element product tables reproduced cell for cell") {
    Criterion cr(2, "product construction equals the transcribed tables", 1);
    const SuperringPtr shipped = parse_structure(l9_table_text());
    const SuperringPtr computed = builtin_structure("l9");
    bool ok = equal_elementwise(*shipped, *computed);
    // the two printed diagonal cells: 1+1 = 2+2 = whole carrier
    ok = ok && computed->sum(el(*computed, "1"), el(*computed, "1")) == computed->full_set();
    ok = ok && computed->sum(el(*computed, "2"), el(*computed, "2")) == computed->full_set();
    cr.finish(ok);
}

TEST_CASE("3: the two-element structure is closed up to degree six") {
    Criterion cr(3, "all 126 non-constant polynomials over K have roots", 1);
    const SuperringPtr k = make_krasner();
    unsigned count = 0;
    bool ok = true;
    for (unsigned d = 1; d <= 6; ++d) {
        PolyEnumerator en(k, d);
        while (auto f = en.next()) {
            ++count;
            if (roots(*f, k).empty()) ok = false;
        }
    }
    cr.note("polynomials checked: " + std::to_string(count));
    ok = ok && count == 126 && is_alg_closed_up_to(k, 6).closed;
    cr.finish(ok);
}

TEST_CASE("4: negative closure witnesses found in order") {
    Criterion cr(4, "first rootless polynomials are X^2+1 over Q2 and X^2+2 over H3", 1);
    const SuperringPtr q2 = make_q2();
    const SuperringPtr h3 = make_hp(3);
    const auto rq = is_alg_closed_up_to(q2, 2);
    const auto rh = is_alg_closed_up_to(h3, 2);
    const bool ok = !rq.closed && *rq.counterexample == parse_poly(q2, "X^2+1") &&
                    !rh.closed && *rh.counterexample == parse_poly(h3, "X^2+2");
    cr.finish(ok);
}

TEST_CASE("5: the quadratic extension of H3") {
    Criterion cr(5, "nine classes, roots, inverses, no zero divisors", 5);
    bool ok = true;

    const QuotientField& q = h3_sqrt2();
    const FiniteSuperring& cls = *q.structure();
    ok = ok && q.class_count() == 9;

    const ElementId omega = q.class_of(parse_poly(q.base(), "X"));
    ok = ok && evaluate(q.modulus(), omega, q.structure(), &q.embedding()).contains(cls.zero());
    const ElementId w = q.class_of(parse_poly(q.base(), "X+1"));
    ok = ok && evaluate(parse_poly(q.base(), "X^2+1"), w, q.structure(), &q.embedding())
                   .contains(cls.zero());

    // not a multifield: the square of [1+X] is multivalued in every mode
    const std::size_t strict_sq = cls.prod(w, w).count();
    const QuotientField& sat = h3_sqrt2(QuotientMode::Saturated);
    const std::size_t sat_sq = sat.structure()->prod(w, w).count();
    cr.note("|[1+X]^2| strict=" + std::to_string(strict_sq) +
            " saturated=" + std::to_string(sat_sq));
    ok = ok && strict_sq >= 2 && sat_sq >= 2;

    for (ElementId c = 1; c < cls.size(); ++c) ok = ok && !inverses(cls, c).empty();
    for (ElementId a = 0; a < cls.size(); ++a)
        for (ElementId b = 0; b < cls.size(); ++b)
            if (cls.prod(a, b).contains(cls.zero()))
                ok = ok && (a == cls.zero() || b == cls.zero());
    cr.finish(ok);
}

TEST_CASE("6: division property suite") {
    Criterion cr(6, "1000 seeded divisions per structure verify the witness", 30);
    std::mt19937_64 rng(20240811);
    bool ok = true;
    for (const char* name : {"krasner", "q2", "h3", "h5"}) {
        const SuperringPtr s = builtin_structure(name);
        for (int i = 0; i < 1000; ++i) {
            const Poly f = random_poly(rng, s, 4, true);
            const Poly g = random_poly(rng, s, 4);
            const Division d = euclid_divide(f, g);
            if (!member(f, envelope_add_poly(poly_prod(d.q, g), d.r))) ok = false;
            if (!(d.r.is_zero() || d.r.degree() < g.degree())) ok = false;
        }
    }
    cr.finish(ok);
}

TEST_CASE("7: degree bounds property suite") {
    Criterion cr(7, "1000 seeded envelopes respect the degree bounds", 30);
    std::mt19937_64 rng(424242);
    bool ok = true;
    unsigned guarded_out = 0;
    for (const char* name : {"krasner", "q2", "h3", "h5"}) {
        const SuperringPtr s = builtin_structure(name);
        for (int i = 0; i < 1000; ++i) {
            const Poly f = random_poly(rng, s, 4);
            const Poly g = random_poly(rng, s, 4);

            const CoeffEnvelope p = poly_prod(f, g);
            if (p.length() != f.degree() + g.degree() + 1) ok = false;
            if (p.at(f.degree() + g.degree()).contains(s->zero())) ok = false;

            if (f == g.negated()) continue;
            // the bound needs the leading coefficients not to cancel; the
            // literal phrasing admits counterexamples, recorded in the
            // conformance report under sum-degree-bounds
            if (f.degree() == g.degree() && g.coeff(g.degree()) == s->neg(f.coeff(f.degree()))) {
                ++guarded_out;
                continue;
            }
            const std::size_t lo = std::min(f.degree(), g.degree());
            const std::size_t hi = std::max(f.degree(), g.degree());
            for (const Poly& t : poly_sum(f, g).members()) {
                if (t.is_zero() || t.degree() < lo || t.degree() > hi) ok = false;
            }
        }
    }
    cr.note("pairs excluded by the leading-coefficient guard: " + std::to_string(guarded_out));
    cr.finish(ok);
}

TEST_CASE("8: full-morphism identities over root adjunctions") {
    Criterion cr(8, "sum/product/evaluation exchange identities for F into F(p)", 30);
    bool ok = true;

    const SuperringPtr k = make_krasner();
    const QuotientField qk = make_quotient(k, parse_poly(k, "X+1"));
    const QuotientField& qh = h3_sqrt2();

    for (const QuotientField* qp : {&qk, &qh}) {
        const MorphismTable& f = qp->embedding();
        const FiniteSuperring& a = *qp->base();
        const FiniteSuperring& b = *qp->structure();
        ok = ok && classify_map(f).cls == MorphismClass::FullMorphism;

        for (ElementId x = 0; x < a.size(); ++x)
            for (ElementId y = 0; y < a.size(); ++y)
                for (ElementId z = 0; z < a.size(); ++z) {
                    // (a) images of n-ary sums
                    std::vector<ElementId> xs{x, y, z};
                    std::vector<ElementId> fx{f(x), f(y), f(z)};
                    if (f.image(nary_sum_elems(a, xs)) != nary_sum_elems(b, fx)) ok = false;

                    // (c) sums of products
                    std::vector<ElemSet> ta{a.prod(x, y), a.prod(y, z), a.prod(z, x)};
                    std::vector<ElemSet> tb{b.prod(f(x), f(y)), b.prod(f(y), f(z)),
                                            b.prod(f(z), f(x))};
                    if (f.image(nary_sum(a, ta)) != nary_sum(b, tb)) ok = false;
                }

        // (b) products of sums, three factor pairs
        for (ElementId a1 = 0; a1 < a.size(); ++a1)
            for (ElementId b1 = 0; b1 < a.size(); ++b1)
                for (ElementId a2 = 0; a2 < a.size(); ++a2)
                    for (ElementId b2 = 0; b2 < a.size(); ++b2)
                        for (ElementId a3 = 0; a3 < a.size(); ++a3)
                            for (ElementId b3 = 0; b3 < a.size(); ++b3) {
                                ElemSet lhs = prodset(
                                    a, prodset(a, a.sum(a1, b1), a.sum(a2, b2)), a.sum(a3, b3));
                                ElemSet rhs = prodset(
                                    b, prodset(b, b.sum(f(a1), f(b1)), b.sum(f(a2), f(b2))),
                                    b.sum(f(a3), f(b3)));
                                if (f.image(lhs) != rhs) ok = false;
                            }

        // (d) evaluation shapes a0 + a1*t + a2*t^2
        for (ElementId a0 = 0; a0 < a.size(); ++a0)
            for (ElementId a1 = 0; a1 < a.size(); ++a1)
                for (ElementId a2 = 0; a2 < a.size(); ++a2)
                    for (ElementId t = 0; t < a.size(); ++t) {
                        const Poly poly = Poly::from_coeffs(qp->base(), {a0, a1, a2});
                        const ElemSet dom = evaluate(poly, t, qp->base());
                        const ElemSet cod = evaluate(poly, f(t), qp->structure(), &f);
                        if (f.image(dom) != cod) ok = false;
                    }
    }
    cr.finish(ok);
}

TEST_CASE("9: algebraicity witnesses for all nine classes") {
    Criterion cr(9, "every class has a witness of degree at most eight", 30);
    const QuotientField& q = h3_sqrt2();
    const ExtensionContext ctx{q.base(), q.structure(), q.embedding()};
    const ElementId gamma = q.class_of(parse_poly(q.base(), "X"));

    bool ok = true;
    std::map<WitnessRoute, int> routes;
    for (ElementId c = 0; c < q.class_count(); ++c) {
        const WitnessResult r =
            eliminate_witness(ctx, gamma, q.modulus(), q.rep_of(c).coeffs());
        if (r.witness.degree() > 8) ok = false;
        if (!evaluate(r.witness, c, q.structure(), &q.embedding())
                 .contains(q.structure()->zero()))
            ok = false;
        ++routes[r.route];
    }
    cr.note("routes trivial/elimination/fallback: " + std::to_string(routes[WitnessRoute::Trivial]) +
            "/" + std::to_string(routes[WitnessRoute::Elimination]) + "/" +
            std::to_string(routes[WitnessRoute::Fallback]));
    ok = ok && routes[WitnessRoute::Trivial] + routes[WitnessRoute::Elimination] +
                   routes[WitnessRoute::Fallback] ==
               9;
    cr.finish(ok);
}

TEST_CASE("10: closure tower over H3") {
    Criterion cr(10, "one quadratic step with full embeddings and a verified root", 5);
    const Tower t = closure_tower(make_hp(3), 2, 1);
    bool ok = t.steps.size() == 1 && t.top->size() == 9;
    if (ok) {
        ok = ok && classify_map(t.steps[0].embedding).cls == MorphismClass::FullMorphism;
        ok = ok && classify_map(t.composites[0]).cls == MorphismClass::FullMorphism;
        ok = ok && evaluate(t.steps[0].modulus, t.steps[0].root, t.top, &t.steps[0].embedding)
                       .contains(t.top->zero());
    }
    cr.finish(ok);
}

TEST_CASE("11: isomorphism search results") {
    Criterion cr(11, "H2 matches K; the quadratic extension differs from the product tables", 60);
    bool ok = find_isomorphism(make_hp(2), make_krasner()).has_value();
    const QuotientField& q = h3_sqrt2();
    ok = ok && !find_isomorphism(q.structure(), builtin_structure("l9")).has_value();
    cr.finish(ok);
}

TEST_CASE("12: morphism claims and characteristic values") {
    Criterion cr(12, "squares map classifies morphism; K into Q2 does not; characteristics", 1);
    const SuperringPtr h3 = make_hp(3);
    const SuperringPtr l9 = builtin_structure("l9");
    bool ok =
        classify_map(parse_morphism(h3, l9, "0:0,1:1,2:2")).cls == MorphismClass::Morphism;
    const SuperringPtr k = make_krasner();
    const SuperringPtr q2 = make_q2();
    ok = ok && classify_map(parse_morphism(k, q2, "0:0,1:1")).cls == MorphismClass::NotMorphism;
    ok = ok && characteristic(*k) == 2;
    ok = ok && characteristic(*make_hp(5)) == 2;
    ok = ok && characteristic(*q2) == 0;
    ok = ok && characteristic(*make_strict(5)) == 5;
    cr.finish(ok);
}

TEST_CASE("13: semantics regression anchors") {
    Criterion cr(13, "sum-closed ideal collapse and the multivalued reduction", 1);
    const SuperringPtr h3 = make_hp(3);
    const Poly p = parse_poly(h3, "X^2+2");
    bool ok = principal_membership(parse_poly(h3, "1"), p, IdealMode::SumClosed);

    const auto reps = reduce(parse_poly(h3, "X^2+X+1"), p);
    ok = ok && reps.size() == 2 && poly_to_string(reps[0]) == "X+1" &&
         poly_to_string(reps[1]) == "X+2";
    cr.finish(ok);
}

TEST_CASE("14: conformance report") {
    Criterion cr(14, "report regenerates byte-stably with the pinned verdicts", 60);
    const ConformanceReport r1 = run_conformance();
    const std::string j1 = conformance_json(r1);
    const std::string j2 = conformance_json(run_conformance());
    bool ok = j1 == j2 && r1.all_match_expected();

    // the four claims that carry the documented discrepancies, with
    // per-mode computed values where applicable
    for (const char* id : {"quotient-unit-product", "hp-into-hq-morphism",
                           "newton-binom-equality", "poly-sign-display"}) {
        const auto it = std::find_if(r1.claims.begin(), r1.claims.end(),
                                     [&](const ConformanceClaim& c) { return c.id == id; });
        if (it == r1.claims.end()) ok = false;
    }
    const auto unit = std::find_if(r1.claims.begin(), r1.claims.end(),
                                   [](const ConformanceClaim& c) {
                                       return c.id == "quotient-unit-product";
                                   });
    ok = ok && unit->details.find("strict") != std::string::npos &&
         unit->details.find("saturated") != std::string::npos;
    cr.finish(ok);
}

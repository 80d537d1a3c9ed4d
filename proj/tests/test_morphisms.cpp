#include <doctest.h>

#include "support.hpp"

using namespace multikit;
using namespace mkt;

TEST_CASE("classification of candidate maps") {
    const SuperringPtr k = make_krasner();
    const MorphismVerdict id = classify_map(identity_morphism(k));
    CHECK(id.cls == MorphismClass::FullMorphism);
    CHECK(id.injective);
    CHECK(id.surjective);

    // inclusion of K into Q2 breaks the negation condition
    const SuperringPtr q2 = make_q2();
    const MorphismVerdict inc = classify_map(parse_morphism(k, q2, "0:0,1:1"));
    CHECK(inc.cls == MorphismClass::NotMorphism);
    CHECK(inc.failed_condition == "f(-a)=-f(a)");

    // x -> (1, x^2) into the nine-element product structure
    const SuperringPtr h3 = make_hp(3);
    const SuperringPtr l9 = builtin_structure("l9");
    const MorphismVerdict sq = classify_map(parse_morphism(h3, l9, "0:0,1:1,2:2"));
    CHECK(sq.cls == MorphismClass::Morphism);
    CHECK(sq.injective);
    CHECK(!sq.surjective);
}

TEST_CASE("extension kinds") {
    const SuperringPtr k = make_krasner();
    const SuperringPtr q2 = make_q2();
    CHECK(extension_kind(parse_morphism(k, q2, "0:0,1:1")) == ExtensionKind::Proto);

    const SuperringPtr h3 = make_hp(3);
    const SuperringPtr h5 = make_hp(5);
    // the tool computes this inclusion as a mere injection: products are
    // taken mod 3 versus mod 5, which violates multiplicativity (the
    // conformance suite records the disagreement with the source text)
    CHECK(extension_kind(parse_morphism(h3, h5, "0:0,1:1,2:2")) == ExtensionKind::Proto);

    const QuotientField& q = h3_sqrt2();
    CHECK(extension_kind(q.embedding()) == ExtensionKind::Full);

    // non-injective candidates are rejected
    const MorphismTable collapse(q2, k, {0, 1, 1});
    CHECK_THROWS_AS(extension_kind(collapse), DomainError);
}

TEST_CASE("composition") {
    const SuperringPtr h3 = make_hp(3);
    const QuotientField& q = h3_sqrt2();
    const MorphismTable id = identity_morphism(h3);
    const MorphismTable f = q.embedding();
    CHECK(compose(id, f).map() == f.map());

    // two-out-of-three on a two-step tower
    const Tower t = closure_tower(make_hp(3), 2, 1);
    REQUIRE(t.steps.size() == 1);
    const MorphismTable& i12 = t.steps[0].embedding;
    const MorphismTable i23 = identity_morphism(t.top);
    const MorphismTable i13 = compose(i12, i23);
    CHECK(classify_map(i13).cls == MorphismClass::FullMorphism);
    CHECK(classify_map(i12).cls == MorphismClass::FullMorphism);

    CHECK_THROWS_AS(compose(f, f), DomainError);
}

TEST_CASE("full morphisms preserve n-ary sums and evaluation shapes") {
    // f(a1+...+an) = f(a1)+...+f(an) and the product/sum exchange identities
    const SuperringPtr h3 = make_hp(3);
    const QuotientField& q = h3_sqrt2();
    const MorphismTable& f = q.embedding();
    const FiniteSuperring& a = *h3;
    const FiniteSuperring& b = *q.structure();

    for (ElementId x = 0; x < a.size(); ++x)
        for (ElementId y = 0; y < a.size(); ++y)
            for (ElementId z = 0; z < a.size(); ++z) {
                std::vector<ElementId> xs{x, y, z};
                const ElemSet lhs = f.image(nary_sum_elems(a, xs));
                std::vector<ElementId> fx{f(x), f(y), f(z)};
                CHECK(lhs == nary_sum_elems(b, fx));

                // sum of products
                std::vector<ElemSet> terms_a{a.prod(x, y), a.prod(y, z)};
                std::vector<ElemSet> terms_b{b.prod(f(x), f(y)), b.prod(f(y), f(z))};
                CHECK(f.image(nary_sum(a, terms_a)) == nary_sum(b, terms_b));

                // product of sums
                const ElemSet pa = prodset(a, a.sum(x, y), a.sum(y, z));
                const ElemSet pb = prodset(b, b.sum(f(x), f(y)), b.sum(f(y), f(z)));
                CHECK(f.image(pa) == pb);
            }
}

TEST_CASE("isomorphism search agrees with the all-bijections oracle") {
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"h2", "krasner"}, {"q2", "x1"},    {"krasner", "q2"}, {"h3", "q2"},
        {"f4", "f4"},      {"h5", "f5"},    {"x2", "x2"},      {"f2", "krasner"},
    };
    for (const auto& [an, bn] : pairs) {
        CAPTURE(an);
        CAPTURE(bn);
        const SuperringPtr a = builtin_structure(an);
        const SuperringPtr b = builtin_structure(bn);
        if (a->size() > 6 || b->size() > 6) continue;
        const auto iso = find_isomorphism(a, b);
        CHECK(iso.has_value() == brute_force_isomorphic(a, b));
        if (iso) {
            CHECK(classify_map(*iso).cls == MorphismClass::FullMorphism);
            // invertibility of the witness
            std::vector<ElementId> inv(b->size());
            for (ElementId i = 0; i < a->size(); ++i) inv[(*iso)(i)] = i;
            CHECK(classify_map(MorphismTable(b, a, inv)).cls == MorphismClass::FullMorphism);
        }
    }
}

TEST_CASE("isomorphism search fixes the constants and returns identity-first") {
    const auto iso = find_isomorphism(make_hp(2), make_krasner());
    REQUIRE(iso.has_value());
    CHECK(iso->map() == std::vector<ElementId>{0, 1});

    const SuperringPtr a = builtin_structure("l9");
    const auto self = find_isomorphism(a, a);
    REQUIRE(self.has_value());
    CHECK((*self)(a->zero()) == a->zero());
    CHECK((*self)(a->one()) == a->one());

    CHECK_THROWS_AS(find_isomorphism(a, a, 5), LimitError);
}

TEST_CASE("morphism map text parsing") {
    const SuperringPtr k = make_krasner();
    const MorphismTable m = parse_morphism(k, k, " 1 : 1 , 0 : 0 ");
    CHECK(m.map() == std::vector<ElementId>{0, 1});
    CHECK_THROWS_AS(parse_morphism(k, k, "0:0"), ParseError);        // not total
    CHECK_THROWS_AS(parse_morphism(k, k, "0:0,1:1,0:1"), ParseError); // duplicate
    CHECK_THROWS_AS(parse_morphism(k, k, "0:0,1:2"), ParseError);    // unknown element
}

TEST_CASE("two-out-of-three fullness on a genuine two-step chain") {
    // K into K(X+1) into a further linear adjunction
    const SuperringPtr k = make_krasner();
    const QuotientField q1 = make_quotient(k, parse_poly(k, "X+1"));
    const SuperringPtr mid = q1.structure();
    const Poly lin = Poly::from_coeffs(mid, {mid->one(), mid->one()}); // X + [1]
    const QuotientField q2 = make_quotient(mid, lin);

    const MorphismTable& i12 = q1.embedding();
    const MorphismTable& i23 = q2.embedding();
    const MorphismTable i13 = compose(i12, i23);
    CHECK(classify_map(i23).cls == MorphismClass::FullMorphism);
    CHECK(classify_map(i13).cls == MorphismClass::FullMorphism);
    CHECK(classify_map(i12).cls == MorphismClass::FullMorphism);
}

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace multikit;
using namespace mkt;

TEST_CASE("krasner and q2 tables") {
    const SuperringPtr k = make_krasner();
    CHECK(k->report().superfield);
    CHECK(characteristic(*k) == 2);
    CHECK(k->neg(el(*k, "1")) == el(*k, "1")); // 0 in 1+1 forces -1 = 1
    CHECK(k->sum(el(*k, "1"), el(*k, "1")) == k->full_set());

    const SuperringPtr q2 = make_q2();
    CHECK(q2->report().superfield);
    CHECK(q2->sum(el(*q2, "1"), el(*q2, "1")) == set_of(*q2, {"1"}));
    CHECK(q2->neg(el(*q2, "1")) == el(*q2, "-1"));
}

TEST_CASE("hp family") {
    CHECK(equal_elementwise(*make_hp(2), *make_krasner()));

    const SuperringPtr h5 = make_hp(5);
    CHECK(h5->sum(el(*h5, "2"), el(*h5, "3")) == set_of(*h5, {"2", "3"}));
    CHECK(h5->sum(el(*h5, "2"), el(*h5, "2")) == h5->full_set());
    CHECK(make_hp(7)->report().superfield);
    for (ElementId a = 0; a < 5; ++a) CHECK(h5->neg(a) == a);

    CHECK_THROWS_AS(make_hp(4), DomainError);
    CHECK_THROWS_AS(make_hp(1), DomainError);
}

TEST_CASE("kaleidoscopes") {
    CHECK(equal_elementwise(*make_kaleidoscope(1), *make_q2()));
    CHECK(make_kaleidoscope(0)->size() == 1);

    const SuperringPtr x2 = make_kaleidoscope(2);
    CHECK(prodset(*x2, set_of(*x2, {"2"}), set_of(*x2, {"-1", "0", "1"})) ==
          set_of(*x2, {"-2", "0", "2"}));
    CHECK(sumset(*x2, set_of(*x2, {"2"}), set_of(*x2, {"-2"})) == x2->full_set());
    CHECK(!x2->report().hyperring);
    CHECK(x2->report().multiring);
}

TEST_CASE("strict fields") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const SuperringPtr f = make_strict(q);
        CAPTURE(q);
        const ClassReport& r = f->report();
        CHECK(r.superfield);
        CHECK(r.hyperring);
        CHECK(r.full);
        CHECK(r.mul_single_valued.pass);
        for (ElementId a = 0; a < f->size(); ++a)
            for (ElementId b = 0; b < f->size(); ++b)
                CHECK(f->sum(a, b).count() == 1);
    }
    CHECK(characteristic(*make_strict(8)) == 2);
    CHECK(characteristic(*make_strict(9)) == 3);
    CHECK_THROWS_AS(make_strict(6), DomainError);
}

TEST_CASE("product of h3 and h5") {
    const SuperringPtr l = product_h(make_hp(3), make_hp(5));
    CHECK(l->size() == 9); // (3-1)(5-1)+1
    CHECK(l->report().superfield);
    CHECK(l->report().hyperring);

    // (1,1)+(1,2) = {(1,1),(1,2),(2,1),(2,2)}
    const ElementId one = el(*l, "(1_1)");
    const ElementId omega = el(*l, "(1_2)");
    CHECK(l->sum(one, omega) == set_of(*l, {"(1_1)", "(1_2)", "(2_1)", "(2_2)"}));
    // 1+1 = whole carrier
    CHECK(l->sum(one, one) == l->full_set());

    CHECK_THROWS_AS(product_h(make_kaleidoscope(2), make_hp(3)), DomainError);
}

TEST_CASE("builtin registry") {
    CHECK(builtin_structure("krasner") != nullptr);
    CHECK(builtin_structure("l9")->size() == 9);
    CHECK(builtin_structure("h11")->size() == 11);
    CHECK(builtin_structure("nope") == nullptr);
    CHECK(builtin_structure("") == nullptr);
    CHECK_THROWS_AS(builtin_structure("h9"), DomainError);
}

TEST_CASE("serialize then parse is the identity") {
    for (const char* name : {"krasner", "q2", "h3", "h5", "x2", "f4", "f9", "l9"}) {
        CAPTURE(name);
        const SuperringPtr s = builtin_structure(name);
        const std::string text = serialize_structure(*s);
        const SuperringPtr back = parse_structure(text);
        CHECK(equal_elementwise(*s, *back));
        // serializing the reparse reproduces the bytes (normal form)
        CHECK(serialize_structure(*back) == text);
    }
}

TEST_CASE("shipped l9 table file") {
    const SuperringPtr shipped = parse_structure(l9_table_text());
    const SuperringPtr computed = builtin_structure("l9");
    CHECK(equal_elementwise(*shipped, *computed));

    // the repository copy stays in sync with the embedded text
    std::ifstream file(std::string(MULTIKIT_DATA_DIR) + "/l9.msr", std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream bytes;
    bytes << file.rdbuf();
    CHECK(bytes.str() == l9_table_text());
}

TEST_CASE("parser error reporting") {
    const char* missing_pair =
        "name t\nelements 0 1\nzero 0\none 1\nneg identity\n"
        "sum 0 0 : 0\nsum 0 1 : 1\n"
        "prod 0 0 : 0\nprod 0 1 : 0\nprod 1 1 : 1\n";
    CHECK_THROWS_WITH_AS(parse_structure(missing_pair),
                         doctest::Contains("missing sum entry for pair (1,1)"), ParseError);

    const char* duplicate =
        "name t\nelements 0 1\nzero 0\none 1\nneg identity\n"
        "sum 0 0 : 0\nsum 0 1 : 1\nsum 1 0 : 1\nsum 1 1 : 0 1\n"
        "prod 0 0 : 0\nprod 0 1 : 0\nprod 1 1 : 1\n";
    CHECK_THROWS_WITH_AS(parse_structure(duplicate), doctest::Contains("duplicate sum entry"),
                         ParseError);

    const char* undeclared =
        "name t\nelements 0 1\nzero 0\none 1\nneg identity\nsum 0 2 : 0\n";
    CHECK_THROWS_WITH_AS(parse_structure(undeclared),
                         doctest::Contains("undeclared element '2'"), ParseError);

    const char* bad_token = "name t\nelements 0 one!\n";
    CHECK_THROWS_AS(parse_structure(bad_token), ParseError);

    // position information points at the offending line
    try {
        parse_structure("name t\nelements 0 1\nzero 0\none 1\nwhat 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
    }
}

TEST_CASE("commutative completion on load") {
    // only one orientation of each pair is listed; the mirror is implied
    const char* text =
        "name t\nelements 0 1\nzero 0\none 1\nneg identity\n"
        "sum 0 0 : 0\nsum 1 0 : 1\nsum 1 1 : 0 1\n"
        "prod 0 0 : 0\nprod 1 0 : 0\nprod 1 1 : 1\n";
    const SuperringPtr s = parse_structure(text);
    CHECK(equal_elementwise(*s, *rename_structure(*make_krasner(), "t", {"0", "1"})));
}

#include <doctest.h>

#include <random>
#include <set>

#include "multikit/elem_set.hpp"

using namespace multikit;

TEST_CASE("basic set operations on a one-word carrier") {
    ElemSet a(10);
    CHECK(a.empty());
    a.insert(3);
    a.insert(7);
    CHECK(a.count() == 2);
    CHECK(a.contains(3));
    CHECK(!a.contains(4));
    CHECK(a.first() == 3);

    ElemSet b = ElemSet::singleton(10, 7);
    CHECK(b.is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK(a.intersect(b) == b);
    CHECK(a.minus(b) == ElemSet::singleton(10, 3));

    CHECK(ElemSet::full(10).count() == 10);
    CHECK_THROWS_AS(a.insert(10), DomainError);
    CHECK_THROWS_AS((void)a.intersects(ElemSet(9)), DomainError);
}

TEST_CASE("indices come back sorted") {
    ElemSet a(64);
    a.insert(63);
    a.insert(0);
    a.insert(17);
    CHECK(a.indices() == std::vector<ElementId>{0, 17, 63});
}

TEST_CASE("multi-word carriers behave like the word-sized ones") {
    // mirror every operation against std::set on a 130-element universe
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<ElementId> dist(0, 129);
    for (int round = 0; round < 50; ++round) {
        ElemSet a(130), b(130);
        std::set<ElementId> ra, rb;
        for (int i = 0; i < 25; ++i) {
            ElementId x = dist(rng), y = dist(rng);
            a.insert(x);
            ra.insert(x);
            b.insert(y);
            rb.insert(y);
        }
        CHECK(a.count() == ra.size());
        ElemSet u = a;
        u.unite(b);
        std::set<ElementId> ru = ra;
        ru.insert(rb.begin(), rb.end());
        CHECK(u.indices() == std::vector<ElementId>(ru.begin(), ru.end()));
        std::set<ElementId> ri;
        for (ElementId x : ra)
            if (rb.count(x)) ri.insert(x);
        CHECK(a.intersect(b).indices() == std::vector<ElementId>(ri.begin(), ri.end()));
        CHECK(a.intersects(b) == !ri.empty());
        CHECK(a.first() == *ra.begin());
    }
}

TEST_CASE("full trims the tail word") {
    ElemSet f = ElemSet::full(70);
    CHECK(f.count() == 70);
    CHECK(f.contains(69));
    ElemSet g(70);
    for (ElementId e = 0; e < 70; ++e) g.insert(e);
    CHECK(f == g);
}

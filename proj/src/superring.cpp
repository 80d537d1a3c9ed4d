#include "multikit/superring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace multikit {

namespace {

std::string bad(const std::string& what) { return "invalid structure: " + what; }

} // namespace

SuperringPtr FiniteSuperring::create(std::string name,
                                     std::vector<std::string> element_names,
                                     ElementId zero, ElementId one,
                                     std::vector<ElementId> neg,
                                     std::vector<ElemSet> sum,
                                     std::vector<ElemSet> prod) {
    const std::size_t n = element_names.size();
    if (n == 0) throw DomainError(bad("empty carrier"));
    if (zero >= n || one >= n) throw DomainError(bad("zero/one out of range"));
    if (neg.size() != n) throw DomainError(bad("neg table size"));
    if (sum.size() != n * n || prod.size() != n * n)
        throw DomainError(bad("operation table size"));

    std::set<std::string> seen;
    for (const auto& nm : element_names) {
        if (nm.empty()) throw DomainError(bad("empty element name"));
        if (!seen.insert(nm).second) throw DomainError(bad("duplicate element name '" + nm + "'"));
    }

    for (ElementId a = 0; a < n; ++a) {
        if (neg[a] >= n) throw DomainError(bad("neg out of range"));
        if (neg[neg[a]] != a)
            throw DomainError(bad("neg is not an involution at '" + element_names[a] + "'"));
    }
    if (neg[zero] != zero) throw DomainError(bad("neg(0) != 0"));

    const auto universe = static_cast<std::uint32_t>(n);
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
            const ElemSet& s = sum[a * n + b];
            const ElemSet& p = prod[a * n + b];
            if (s.universe() != universe || p.universe() != universe)
                throw DomainError(bad("table entry over wrong carrier"));
            if (s.empty())
                throw DomainError(bad("empty sum entry at (" + element_names[a] + "," +
                                      element_names[b] + ")"));
            if (p.empty())
                throw DomainError(bad("empty prod entry at (" + element_names[a] + "," +
                                      element_names[b] + ")"));
            if (s != sum[b * n + a] || p != prod[b * n + a])
                throw DomainError(bad("tables not commutative at (" + element_names[a] + "," +
                                      element_names[b] + ")"));
        }
        if (sum[a * n + zero] != ElemSet::singleton(universe, a))
            throw DomainError(bad("sum(a,0) != {a} at '" + element_names[a] + "'"));
        if (prod[a * n + zero] != ElemSet::singleton(universe, zero))
            throw DomainError(bad("prod(a,0) != {0} at '" + element_names[a] + "'"));
    }

    auto s = std::shared_ptr<FiniteSuperring>(new FiniteSuperring());
    s->name_ = std::move(name);
    s->names_ = std::move(element_names);
    s->zero_ = zero;
    s->one_ = one;
    s->neg_ = std::move(neg);
    s->sum_ = std::move(sum);
    s->prod_ = std::move(prod);
    return s;
}

std::optional<ElementId> FiniteSuperring::find_element(const std::string& name) const {
    for (ElementId e = 0; e < size(); ++e)
        if (names_[e] == name) return e;
    return std::nullopt;
}

const ClassReport& FiniteSuperring::report() const {
    std::call_once(report_once_, [this] { report_ = std::make_unique<ClassReport>(validate(*this)); });
    return *report_;
}

std::string FiniteSuperring::set_to_string(const ElemSet& s) const {
    std::string out;
    s.for_each([&](ElementId e) {
        if (!out.empty()) out += ' ';
        out += names_[e];
    });
    return out.empty() ? "(empty)" : out;
}

ElemSet sumset(const FiniteSuperring& s, const ElemSet& a, const ElemSet& b) {
    if (a.universe() != s.size() || b.universe() != s.size())
        throw DomainError("sumset: carrier mismatch");
    ElemSet r = s.empty_set();
    a.for_each([&](ElementId x) { b.for_each([&](ElementId y) { r.unite(s.sum(x, y)); }); });
    return r;
}

ElemSet prodset(const FiniteSuperring& s, const ElemSet& a, const ElemSet& b) {
    if (a.universe() != s.size() || b.universe() != s.size())
        throw DomainError("prodset: carrier mismatch");
    ElemSet r = s.empty_set();
    a.for_each([&](ElementId x) { b.for_each([&](ElementId y) { r.unite(s.prod(x, y)); }); });
    return r;
}

ElemSet negset(const FiniteSuperring& s, const ElemSet& a) {
    if (a.universe() != s.size()) throw DomainError("negset: carrier mismatch");
    ElemSet r = s.empty_set();
    a.for_each([&](ElementId x) { r.insert(s.neg(x)); });
    return r;
}

ElemSet nary_sum(const FiniteSuperring& s, std::span<const ElemSet> items) {
    ElemSet acc = s.singleton(s.zero());
    for (const ElemSet& it : items) acc = sumset(s, acc, it);
    return acc;
}

ElemSet nary_prod(const FiniteSuperring& s, std::span<const ElemSet> items) {
    ElemSet acc = s.singleton(s.one());
    for (const ElemSet& it : items) acc = prodset(s, acc, it);
    return acc;
}

ElemSet nary_sum_elems(const FiniteSuperring& s, std::span<const ElementId> items) {
    std::vector<ElemSet> sets;
    sets.reserve(items.size());
    for (ElementId e : items) sets.push_back(s.singleton(e));
    return nary_sum(s, sets);
}

ElemSet nary_prod_elems(const FiniteSuperring& s, std::span<const ElementId> items) {
    std::vector<ElemSet> sets;
    sets.reserve(items.size());
    for (ElementId e : items) sets.push_back(s.singleton(e));
    return nary_prod(s, sets);
}

ElemSet inverses(const FiniteSuperring& s, ElementId a) {
    ElemSet r = s.empty_set();
    for (ElementId b = 0; b < s.size(); ++b)
        if (s.prod(a, b).contains(s.one())) r.insert(b);
    return r;
}

unsigned characteristic(const FiniteSuperring& s) {
    // Partial sums of 1 form a sequence over the finite powerset, so it is
    // eventually periodic; a repeated set without 0 means characteristic 0.
    ElemSet acc = s.singleton(s.one());
    std::map<ElemSet, unsigned> seen;
    for (unsigned n = 1;; ++n) {
        if (acc.contains(s.zero())) return n;
        if (!seen.emplace(acc, n).second) return 0;
        acc = sumset(s, acc, s.singleton(s.one()));
    }
}

namespace {

// Helpers shared by validate(). All loops ascend in element index so the
// first failure found is the lexicographically minimal witness.

using Table = const ElemSet& (FiniteSuperring::*)(ElementId, ElementId) const;

AxiomResult check_m4(const FiniteSuperring& s, Table t) {
    // commutativity is enforced at construction; re-checked for the report
    AxiomResult r;
    for (ElementId a = 0; a < s.size() && r.pass; ++a)
        for (ElementId b = a; b < s.size() && r.pass; ++b)
            if ((s.*t)(a, b) != (s.*t)(b, a)) r = {false, {a, b}};
    return r;
}

AxiomResult check_add_m1(const FiniteSuperring& s) {
    // c in a+b  =>  a in c+(-b)  and  b in (-a)+c
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b) {
            bool ok = true;
            ElementId bad_c = 0;
            s.sum(a, b).for_each([&](ElementId c) {
                if (!ok) return;
                if (!s.sum(c, s.neg(b)).contains(a) || !s.sum(s.neg(a), c).contains(b)) {
                    ok = false;
                    bad_c = c;
                }
            });
            if (!ok) return {false, {a, b, bad_c}};
        }
    return r;
}

AxiomResult check_add_m2(const FiniteSuperring& s) {
    // b in a+0 iff a = b
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        if (s.sum(a, s.zero()) != ElemSet::singleton(s.size(), a)) return {false, {a}};
    return r;
}

AxiomResult check_m3(const FiniteSuperring& s, Table t) {
    // (a t b) t c  subset of  a t (b t c), element-quantified form; with M4
    // the symmetric instance gives the reverse inclusion.
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b)
            for (ElementId c = 0; c < s.size(); ++c) {
                ElemSet lhs = s.empty_set();
                (s.*t)(a, b).for_each([&](ElementId x) { lhs.unite((s.*t)(x, c)); });
                ElemSet rhs = s.empty_set();
                (s.*t)(b, c).for_each([&](ElementId y) { rhs.unite((s.*t)(a, y)); });
                if (!lhs.is_subset_of(rhs)) {
                    ElementId w = lhs.minus(rhs).first();
                    return {false, {a, b, c, w}};
                }
            }
    return r;
}

AxiomResult check_mul_unit(const FiniteSuperring& s) {
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        if (!s.prod(a, s.one()).contains(a)) return {false, {a}};
    return r;
}

AxiomResult check_mul_single_valued(const FiniteSuperring& s) {
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = a; b < s.size(); ++b)
            if (s.prod(a, b).count() != 1) return {false, {a, b}};
    return r;
}

AxiomResult check_absorbing(const FiniteSuperring& s) {
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        if (s.prod(a, s.zero()) != ElemSet::singleton(s.size(), s.zero())) return {false, {a}};
    return r;
}

AxiomResult check_sign_rule(const FiniteSuperring& s) {
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = a; b < s.size(); ++b) {
            ElemSet n_ab = negset(s, s.prod(a, b));
            if (n_ab != s.prod(s.neg(a), b) || n_ab != s.prod(a, s.neg(b)))
                return {false, {a, b}};
        }
    return r;
}

void check_distrib(const FiniteSuperring& s, AxiomResult& weak, AxiomResult& equal,
                   ElemSet& lhs_out, ElemSet& rhs_out) {
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b)
            for (ElementId c = 0; c < s.size(); ++c) {
                ElemSet lhs = prodset(s, s.singleton(c), s.sum(a, b));
                ElemSet rhs = sumset(s, s.prod(c, a), s.prod(c, b));
                if (weak.pass && !lhs.is_subset_of(rhs)) {
                    ElementId w = lhs.minus(rhs).first();
                    weak = {false, {a, b, c, w}};
                }
                if (equal.pass && lhs != rhs) {
                    ElemSet diff = lhs.minus(rhs);
                    if (diff.empty()) diff = rhs.minus(lhs);
                    equal = {false, {a, b, c, diff.first()}};
                    lhs_out = lhs;
                    rhs_out = rhs;
                }
                if (!weak.pass && !equal.pass) return;
            }
}

AxiomResult check_no_zero_divisors(const FiniteSuperring& s) {
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b)
            if (s.prod(a, b).contains(s.zero()) && a != s.zero() && b != s.zero())
                return {false, {a, b}};
    return r;
}

AxiomResult check_invertibility(const FiniteSuperring& s) {
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a) {
        if (a == s.zero()) continue;
        if (inverses(s, a).empty()) return {false, {a}};
    }
    return r;
}

AxiomResult check_mul_inverse_m1(const FiniteSuperring& s) {
    // d in a*b  =>  some inverse of b lies in a * (some inverse of d),
    // quantified over nonzero a, b, d.
    AxiomResult r;
    for (ElementId a = 0; a < s.size(); ++a) {
        if (a == s.zero()) continue;
        for (ElementId b = 0; b < s.size(); ++b) {
            if (b == s.zero()) continue;
            ElemSet inv_b = inverses(s, b);
            bool ok = true;
            ElementId bad_d = 0;
            s.prod(a, b).for_each([&](ElementId d) {
                if (!ok || d == s.zero()) return;
                ElemSet reach = prodset(s, s.singleton(a), inverses(s, d));
                if (!reach.intersects(inv_b)) {
                    ok = false;
                    bad_d = d;
                }
            });
            if (!ok) return {false, {a, b, bad_d}};
        }
    }
    return r;
}

} // namespace

ClassReport validate(const FiniteSuperring& s) {
    ClassReport r;
    r.add_m1 = check_add_m1(s);
    r.add_m2 = check_add_m2(s);
    r.add_m3 = check_m3(s, &FiniteSuperring::sum);
    r.add_m4 = check_m4(s, &FiniteSuperring::sum);

    r.mul_m3 = check_m3(s, &FiniteSuperring::prod);
    r.mul_m4 = check_m4(s, &FiniteSuperring::prod);
    r.mul_unit = check_mul_unit(s);
    r.mul_single_valued = check_mul_single_valued(s);

    r.absorbing = check_absorbing(s);
    r.sign_rule = check_sign_rule(s);
    check_distrib(s, r.weak_distrib, r.distrib_equality, r.distrib_lhs, r.distrib_rhs);

    r.nontrivial.pass = s.zero() != s.one();
    r.no_zero_divisors = check_no_zero_divisors(s);
    r.invertibility = check_invertibility(s);

    r.additive_multigroup =
        r.add_m1.pass && r.add_m2.pass && r.add_m3.pass && r.add_m4.pass;
    r.multiplicative_multimonoid = r.mul_m3.pass && r.mul_m4.pass && r.mul_unit.pass;
    r.multiring = r.additive_multigroup && r.mul_single_valued.pass && r.mul_m3.pass &&
                  r.mul_m4.pass && r.mul_unit.pass && r.absorbing.pass && r.weak_distrib.pass;
    r.superring = r.additive_multigroup && r.multiplicative_multimonoid && r.absorbing.pass &&
                  r.weak_distrib.pass && r.sign_rule.pass;
    r.hyperring = r.multiring && r.distrib_equality.pass;
    r.full = r.superring && r.distrib_equality.pass;
    r.superdomain = r.superring && r.nontrivial.pass && r.no_zero_divisors.pass;
    r.quasi_superfield = r.superring && r.nontrivial.pass && r.invertibility.pass;
    r.superfield = r.superdomain && r.quasi_superfield;

    // The multiplicative multigroup exchange is never required for a
    // verdict; report it only when the invertibility structure warrants.
    if (r.quasi_superfield) r.mul_inverse_m1 = check_mul_inverse_m1(s);

    r.implications_ok = (!r.superfield || (r.superdomain && r.quasi_superfield)) &&
                        (!r.hyperring || r.multiring) && (!r.multiring || r.superring) &&
                        (!r.full || r.superring);
    return r;
}

bool equal_elementwise(const FiniteSuperring& a, const FiniteSuperring& b) {
    if (a.size() != b.size()) return false;
    if (a.element_names() != b.element_names()) return false;
    if (a.zero() != b.zero() || a.one() != b.one()) return false;
    if (a.neg_table() != b.neg_table()) return false;
    for (ElementId x = 0; x < a.size(); ++x)
        for (ElementId y = 0; y < a.size(); ++y)
            if (a.sum(x, y) != b.sum(x, y) || a.prod(x, y) != b.prod(x, y)) return false;
    return true;
}

SuperringPtr rename_structure(const FiniteSuperring& s, std::string name,
                              std::vector<std::string> element_names) {
    if (element_names.size() != s.size())
        throw DomainError("rename_structure: name count mismatch");
    std::vector<ElemSet> sum, prod;
    sum.reserve(s.size() * s.size());
    prod.reserve(s.size() * s.size());
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b) {
            sum.push_back(s.sum(a, b));
            prod.push_back(s.prod(a, b));
        }
    return FiniteSuperring::create(std::move(name), std::move(element_names), s.zero(), s.one(),
                                   s.neg_table(), std::move(sum), std::move(prod));
}

} // namespace multikit

#include "multikit/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace multikit {

MorphismTable::MorphismTable(SuperringPtr domain, SuperringPtr codomain,
                             std::vector<ElementId> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    if (map_.size() != domain_->size())
        throw DomainError("morphism table: map not total over the domain");
    for (ElementId v : map_)
        if (v >= codomain_->size()) throw DomainError("morphism table: image out of range");
}

ElemSet MorphismTable::image(const ElemSet& s) const {
    ElemSet out(codomain_->size());
    s.for_each([&](ElementId e) { out.insert(map_[e]); });
    return out;
}

bool MorphismTable::injective() const {
    std::vector<bool> hit(codomain_->size(), false);
    for (ElementId v : map_) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool MorphismTable::surjective() const {
    std::vector<bool> hit(codomain_->size(), false);
    for (ElementId v : map_) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string MorphismTable::to_string() const {
    std::string out;
    for (ElementId a = 0; a < domain_->size(); ++a) {
        if (!out.empty()) out += ',';
        out += domain_->element_name(a) + ":" + codomain_->element_name(map_[a]);
    }
    return out;
}

MorphismVerdict classify_map(const MorphismTable& m) {
    const FiniteSuperring& A = *m.domain();
    const FiniteSuperring& B = *m.codomain();
    MorphismVerdict v;
    v.injective = m.injective();
    v.surjective = m.surjective();

    auto not_morphism = [&](const std::string& cond, std::vector<ElementId> w) {
        v.cls = MorphismClass::NotMorphism;
        v.failed_condition = cond;
        v.witness = std::move(w);
        return v;
    };

    if (m(A.zero()) != B.zero()) return not_morphism("f(0)=0", {A.zero()});
    if (m(A.one()) != B.one()) return not_morphism("f(1)=1", {A.one()});
    for (ElementId a = 0; a < A.size(); ++a)
        if (m(A.neg(a)) != B.neg(m(a))) return not_morphism("f(-a)=-f(a)", {a});

    for (ElementId a = 0; a < A.size(); ++a)
        for (ElementId b = 0; b < A.size(); ++b) {
            const ElemSet sum_img = m.image(A.sum(a, b));
            if (!sum_img.is_subset_of(B.sum(m(a), m(b)))) {
                ElementId c = 0;
                bool got = false;
                A.sum(a, b).for_each([&](ElementId x) {
                    if (!got && !B.sum(m(a), m(b)).contains(m(x))) { c = x; got = true; }
                });
                return not_morphism("c in a+b => f(c) in f(a)+f(b)", {a, b, c});
            }
            const ElemSet prod_img = m.image(A.prod(a, b));
            if (!prod_img.is_subset_of(B.prod(m(a), m(b)))) {
                ElementId c = 0;
                bool got = false;
                A.prod(a, b).for_each([&](ElementId x) {
                    if (!got && !B.prod(m(a), m(b)).contains(m(x))) { c = x; got = true; }
                });
                return not_morphism("c in a*b => f(c) in f(a)*f(b)", {a, b, c});
            }
        }

    v.cls = MorphismClass::Morphism;
    for (ElementId a = 0; a < A.size(); ++a)
        for (ElementId b = 0; b < A.size(); ++b) {
            if (m.image(A.sum(a, b)) != B.sum(m(a), m(b))) return v;
            if (m.image(A.prod(a, b)) != B.prod(m(a), m(b))) return v;
        }
    v.cls = MorphismClass::FullMorphism;
    return v;
}

ExtensionKind extension_kind(const MorphismTable& embedding) {
    if (!embedding.injective())
        throw DomainError("extension_kind: embedding must be injective");
    switch (classify_map(embedding).cls) {
        case MorphismClass::FullMorphism: return ExtensionKind::Full;
        case MorphismClass::Morphism: return ExtensionKind::Extension;
        default: return ExtensionKind::Proto;
    }
}

MorphismTable identity_morphism(const SuperringPtr& s) {
    std::vector<ElementId> map(s->size());
    std::iota(map.begin(), map.end(), 0);
    return {s, s, std::move(map)};
}

MorphismTable compose(const MorphismTable& f, const MorphismTable& g) {
    if (f.codomain() != g.domain() && !equal_elementwise(*f.codomain(), *g.domain()))
        throw DomainError("compose: codomain of f is not the domain of g");
    std::vector<ElementId> map(f.domain()->size());
    for (ElementId a = 0; a < map.size(); ++a) map[a] = g(f(a));
    return {f.domain(), g.codomain(), std::move(map)};
}

namespace {

// Cheap invariants preserved by full isomorphisms, used to prune the
// bijection search.
struct Signature {
    bool neg_fixed;
    bool invertible;
    std::vector<std::size_t> sum_sizes; // sorted |a+b| over all b
};

Signature signature_of(const FiniteSuperring& s, ElementId a) {
    Signature sig;
    sig.neg_fixed = s.neg(a) == a;
    sig.invertible = !inverses(s, a).empty();
    sig.sum_sizes.reserve(s.size());
    for (ElementId b = 0; b < s.size(); ++b) sig.sum_sizes.push_back(s.sum(a, b).count());
    std::sort(sig.sum_sizes.begin(), sig.sum_sizes.end());
    return sig;
}

bool partial_consistent(const FiniteSuperring& A, const FiniteSuperring& B,
                        const std::vector<ElementId>& map, ElementId upto) {
    // check all constraints whose arguments are already assigned
    for (ElementId a = 0; a <= upto; ++a) {
        if (B.neg(map[a]) != map[A.neg(a)] && A.neg(a) <= upto) return false;
        for (ElementId b = 0; b <= upto; ++b) {
            const ElemSet& sa = A.sum(a, b);
            const ElemSet& sb = B.sum(map[a], map[b]);
            if (sa.count() != sb.count()) return false;
            bool ok = true;
            sa.for_each([&](ElementId c) {
                if (c <= upto && !sb.contains(map[c])) ok = false;
            });
            if (!ok) return false;
            const ElemSet& pa = A.prod(a, b);
            const ElemSet& pb = B.prod(map[a], map[b]);
            if (pa.count() != pb.count()) return false;
            pa.for_each([&](ElementId c) {
                if (c <= upto && !pb.contains(map[c])) ok = false;
            });
            if (!ok) return false;
        }
    }
    return true;
}

} // namespace

std::optional<MorphismTable> find_isomorphism(const SuperringPtr& ap, const SuperringPtr& bp,
                                              unsigned max_carrier) {
    const FiniteSuperring& A = *ap;
    const FiniteSuperring& B = *bp;
    if (A.size() > max_carrier || B.size() > max_carrier)
        throw LimitError("find_isomorphism: carrier larger than the configured bound of " +
                         std::to_string(max_carrier));
    if (A.size() != B.size()) return std::nullopt;

    const std::uint32_t n = A.size();
    std::vector<Signature> siga, sigb;
    for (ElementId e = 0; e < n; ++e) {
        siga.push_back(signature_of(A, e));
        sigb.push_back(signature_of(B, e));
    }

    std::vector<ElementId> map(n, 0);
    std::vector<bool> used(n, false);

    auto is_iso = [&](const MorphismTable& m) {
        if (classify_map(m).cls != MorphismClass::FullMorphism) return false;
        std::vector<ElementId> inv(n);
        for (ElementId a = 0; a < n; ++a) inv[m(a)] = a;
        MorphismTable back(bp, ap, std::move(inv));
        return classify_map(back).cls == MorphismClass::FullMorphism;
    };

    // assign images in domain index order; candidate images in index order,
    // so the first hit is the lexicographically first isomorphism
    std::optional<MorphismTable> found;
    auto rec = [&](auto&& self, ElementId a) -> bool {
        if (a == n) {
            MorphismTable m(ap, bp, map);
            if (is_iso(m)) {
                found = std::move(m);
                return true;
            }
            return false;
        }
        for (ElementId img = 0; img < n; ++img) {
            if (used[img]) continue;
            if (a == A.zero() && img != B.zero()) continue;
            if (a == A.one() && img != B.one()) continue;
            if (img == B.zero() && a != A.zero()) continue;
            if (img == B.one() && a != A.one()) continue;
            if (siga[a].neg_fixed != sigb[img].neg_fixed) continue;
            if (siga[a].invertible != sigb[img].invertible) continue;
            if (siga[a].sum_sizes != sigb[img].sum_sizes) continue;
            map[a] = img;
            used[img] = true;
            if (partial_consistent(A, B, map, a) && self(self, a + 1)) return true;
            used[img] = false;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

MorphismTable parse_morphism(const SuperringPtr& domain, const SuperringPtr& codomain,
                             const std::string& text) {
    std::string clean;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) clean += c;

    std::vector<std::optional<ElementId>> map(domain->size());
    std::size_t pos = 0;
    int entry = 1;
    while (pos < clean.size()) {
        std::size_t comma = clean.find(',', pos);
        if (comma == std::string::npos) comma = clean.size();
        std::string item = clean.substr(pos, comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("morphism entry '" + item + "' lacks ':'", 1, entry);
        auto a = domain->find_element(item.substr(0, colon));
        if (!a) throw ParseError("unknown domain element '" + item.substr(0, colon) + "'", 1, entry);
        auto b = codomain->find_element(item.substr(colon + 1));
        if (!b)
            throw ParseError("unknown codomain element '" + item.substr(colon + 1) + "'", 1, entry);
        if (map[*a]) throw ParseError("duplicate map entry for '" + item.substr(0, colon) + "'", 1, entry);
        map[*a] = *b;
        pos = comma + 1;
        ++entry;
    }
    std::vector<ElementId> total(domain->size());
    for (ElementId a = 0; a < domain->size(); ++a) {
        if (!map[a])
            throw ParseError("morphism map is not total: missing '" + domain->element_name(a) + "'",
                             1, entry);
        total[a] = *map[a];
    }
    return {domain, codomain, std::move(total)};
}

} // namespace multikit

#ifndef MULTIKIT_TESTS_SUPPORT_HPP
#define MULTIKIT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "multikit/extensions.hpp"
#include "multikit/quotients.hpp"
#include "multikit/structures.hpp"

namespace mkt {

using namespace multikit;

inline ElemSet set_of(const FiniteSuperring& s, std::initializer_list<const char*> names) {
    ElemSet out(s.size());
    for (const char* n : names) out.insert(*s.find_element(n));
    return out;
}

inline ElementId el(const FiniteSuperring& s, const char* name) {
    return *s.find_element(name);
}

/// shared H3(X^2+2) instances; building them re-validates an 81-entry table
inline const QuotientField& h3_sqrt2(QuotientMode mode = QuotientMode::Strict) {
    static const QuotientField strict = [] {
        const SuperringPtr h3 = make_hp(3);
        return make_quotient(h3, parse_poly(h3, "X^2+2"), QuotientMode::Strict);
    }();
    static const QuotientField saturated = [] {
        const SuperringPtr h3 = make_hp(3);
        return make_quotient(h3, parse_poly(h3, "X^2+2"), QuotientMode::Saturated);
    }();
    return mode == QuotientMode::Strict ? strict : saturated;
}

/// all-bijections isomorphism oracle for small carriers
inline bool brute_force_isomorphic(const SuperringPtr& ap, const SuperringPtr& bp) {
    const FiniteSuperring& a = *ap;
    const FiniteSuperring& b = *bp;
    if (a.size() != b.size()) return false;
    std::vector<ElementId> perm(a.size());
    for (ElementId i = 0; i < a.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        MorphismTable m(ap, bp, perm);
        if (classify_map(m).cls != MorphismClass::FullMorphism) continue;
        std::vector<ElementId> inv(a.size());
        for (ElementId i = 0; i < a.size(); ++i) inv[perm[i]] = i;
        if (classify_map(MorphismTable(bp, ap, inv)).cls == MorphismClass::FullMorphism)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Poly random_poly(std::mt19937_64& rng, const SuperringPtr& s, std::size_t max_degree,
                        bool allow_zero = false) {
    std::uniform_int_distribution<std::size_t> degree_dist(0, max_degree);
    std::uniform_int_distribution<ElementId> coeff_dist(0, s->size() - 1);
    while (true) {
        const std::size_t d = degree_dist(rng);
        std::vector<ElementId> coeffs(d + 1);
        for (auto& c : coeffs) c = coeff_dist(rng);
        Poly p = Poly::from_coeffs(s, std::move(coeffs));
        if (!p.is_zero() || allow_zero) return p;
    }
}

} // namespace mkt

#endif

#include "multikit/ideals.hpp"

#include <algorithm>

namespace multikit {

bool is_ideal(const FiniteSuperring& s, const ElemSet& candidate) {
    if (candidate.universe() != s.size()) throw DomainError("is_ideal: carrier mismatch");
    if (candidate.empty()) return false;
    bool ok = true;
    candidate.for_each([&](ElementId a) {
        if (!ok) return;
        candidate.for_each([&](ElementId b) {
            if (ok && !s.sum(a, b).is_subset_of(candidate)) ok = false;
        });
        for (ElementId x = 0; x < s.size() && ok; ++x)
            if (!s.prod(x, a).is_subset_of(candidate)) ok = false;
    });
    return ok;
}

namespace {

bool prime_flag(const FiniteSuperring& s, const ElemSet& p) {
    if (p.contains(s.one())) return false;
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b)
            if (s.prod(a, b).is_subset_of(p) && !p.contains(a) && !p.contains(b)) return false;
    return true;
}

bool strongly_prime_flag(const FiniteSuperring& s, const ElemSet& p) {
    if (p.contains(s.one())) return false;
    for (ElementId a = 0; a < s.size(); ++a)
        for (ElementId b = 0; b < s.size(); ++b)
            if (s.prod(a, b).intersects(p) && !p.contains(a) && !p.contains(b)) return false;
    return true;
}

} // namespace

std::vector<IdealSet> enumerate_ideals(const FiniteSuperring& s, unsigned max_carrier) {
    if (s.size() > max_carrier)
        throw LimitError("enumerate_ideals: carrier larger than the configured bound of " +
                         std::to_string(max_carrier));

    // Every ideal contains 0 (A*a covers 0*a), so fix that bit and walk the
    // remaining subsets in increasing mask order; that is lexicographic in
    // the canonical element order.
    std::vector<IdealSet> out;
    const std::uint32_t n = s.size();
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (!(mask & (std::uint64_t{1} << s.zero()))) continue;
        ElemSet cand(n);
        for (std::uint32_t e = 0; e < n; ++e)
            if (mask & (std::uint64_t{1} << e)) cand.insert(e);
        if (!is_ideal(s, cand)) continue;
        IdealSet ideal;
        ideal.elements = cand;
        ideal.prime = prime_flag(s, cand);
        ideal.strongly_prime = strongly_prime_flag(s, cand);
        out.push_back(std::move(ideal));
    }

    for (IdealSet& i : out) {
        if (i.elements.count() == s.size()) continue; // not proper
        bool maximal = true;
        for (const IdealSet& j : out) {
            if (j.elements.count() == s.size() || j.elements == i.elements) continue;
            if (i.elements.is_subset_of(j.elements)) {
                maximal = false;
                break;
            }
        }
        i.maximal = maximal;
    }
    return out;
}

SuperringPtr quotient_by_ideal(const SuperringPtr& sp, const ElemSet& ideal) {
    const FiniteSuperring& s = *sp;
    if (!is_ideal(s, ideal)) throw DomainError("quotient_by_ideal: not an ideal");

    const std::uint32_t n = s.size();
    auto related = [&](ElementId x, ElementId y) {
        return sumset(s, s.singleton(x), s.singleton(s.neg(y))).intersects(ideal);
    };

    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) rel[x][y] = related(x, y);

    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (!rel[x][y]) continue;
            for (ElementId z = 0; z < n; ++z)
                if (rel[y][z] && !rel[x][z])
                    throw DomainError("quotient_by_ideal: relation not transitive at (" +
                                      s.element_name(x) + "," + s.element_name(y) + "," +
                                      s.element_name(z) + ")");
        }

    // Classes keyed by minimal-index representative.
    std::vector<ElementId> class_of(n);
    std::vector<ElementId> reps;
    for (ElementId x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t c = 0; c < reps.size() && !found; ++c)
            if (rel[reps[c]][x]) {
                class_of[x] = static_cast<ElementId>(c);
                found = true;
            }
        if (!found) {
            class_of[x] = static_cast<ElementId>(reps.size());
            reps.push_back(x);
        }
    }

    const auto m = static_cast<std::uint32_t>(reps.size());
    std::vector<std::string> names;
    names.reserve(m);
    for (ElementId r : reps) names.push_back("[" + s.element_name(r) + "]");

    auto project = [&](const ElemSet& src) {
        ElemSet out(m);
        src.for_each([&](ElementId e) { out.insert(class_of[e]); });
        return out;
    };

    std::vector<ElemSet> sum(m * m), prod(m * m);
    for (ElementId a = 0; a < m; ++a)
        for (ElementId b = 0; b < m; ++b) {
            sum[a * m + b] = project(s.sum(reps[a], reps[b]));
            prod[a * m + b] = project(s.prod(reps[a], reps[b]));
        }
    std::vector<ElementId> neg(m);
    for (ElementId a = 0; a < m; ++a) neg[a] = class_of[s.neg(reps[a])];

    return FiniteSuperring::create(s.name() + "_mod_ideal", std::move(names),
                                   class_of[s.zero()], class_of[s.one()], std::move(neg),
                                   std::move(sum), std::move(prod));
}

} // namespace multikit

#include "multikit/quotients.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace multikit {

bool principal_membership(const Poly& f, const Poly& p, IdealMode mode, unsigned max_summands) {
    if (p.is_zero()) throw DomainError("principal_membership: zero modulus");
    const SuperringPtr& sp = f.structure();
    const std::size_t m = p.degree();

    if (mode == IdealMode::MultipleSet) {
        if (!sp->report().superdomain)
            throw DomainError("principal_membership: multiple-set mode needs a superdomain");
        if (f.is_zero()) return true;
        if (f.degree() < m) return false;
        PolyEnumerator en(sp, f.degree() - m);
        while (auto q = en.next())
            if (member(f, poly_prod(*q, p))) return true;
        return false;
    }

    // SumClosed: f in q1*p + ... + qk*p with k <= max_summands and each
    // product envelope held inside the degree window deg f + deg p.
    if (f.is_zero()) return true;
    const std::size_t qdeg_max = f.degree();

    std::vector<Poly> q_pool{Poly::zero(sp)};
    for (std::size_t d = 0; d <= qdeg_max; ++d) {
        PolyEnumerator en(sp, d);
        while (auto q = en.next()) q_pool.push_back(*q);
    }

    std::vector<CoeffEnvelope> envs;
    envs.reserve(q_pool.size());
    for (const Poly& q : q_pool)
        envs.push_back(q.is_zero() ? CoeffEnvelope(sp, {}) : poly_prod(q, p));

    // summand count k realized by allowing the zero polynomial in the pool
    std::vector<std::size_t> pick(std::max(1u, max_summands), 0);
    const std::size_t slots = pick.size();
    while (true) {
        CoeffEnvelope acc = envs[pick[0]];
        for (std::size_t i = 1; i < slots; ++i) acc = envelope_sum(acc, envs[pick[i]]);
        if (member(f, acc)) return true;
        std::size_t i = 0;
        for (; i < slots; ++i) {
            if (++pick[i] < envs.size()) break;
            pick[i] = 0;
        }
        if (i == slots) return false;
    }
}

IrredResult is_irreducible(const Poly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw DomainError("is_irreducible: degree must be at least 1");
    const SuperringPtr& sp = p.structure();
    if (!sp->report().superdomain)
        throw DomainError("is_irreducible: coefficient structure must be a superdomain");

    IrredResult out;
    out.irreducible = true;
    const std::size_t n = p.degree();
    for (std::size_t dg = 1; dg < n && out.irreducible; ++dg) {
        PolyEnumerator ge(sp, dg);
        while (auto g = ge.next()) {
            PolyEnumerator he(sp, n - dg);
            bool done = false;
            while (auto h = he.next()) {
                if (member(p, poly_prod(*g, *h))) {
                    out.irreducible = false;
                    out.factor_witness = {{*g, *h}};
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
    }

    // divisor definition: every nonconstant u with p in <u> has u in <p>
    out.secondary_irreducible = true;
    for (std::size_t du = 1; du <= n && out.secondary_irreducible; ++du) {
        PolyEnumerator ue(sp, du);
        while (auto u = ue.next()) {
            if (principal_membership(p, *u, IdealMode::MultipleSet) &&
                !principal_membership(*u, p, IdealMode::MultipleSet)) {
                out.secondary_irreducible = false;
                break;
            }
        }
    }
    return out;
}

std::vector<Poly> reduce_envelope(const CoeffEnvelope& e, const Poly& p) {
    if (p.is_zero() || p.degree() < 1) throw DomainError("reduce: modulus degree must be >= 1");
    const SuperringPtr& sp = p.structure();
    const FiniteSuperring& s = *sp;
    const std::size_t n = p.degree();
    const std::size_t top = e.length() == 0 ? 0 : e.length() - 1;
    const std::size_t dq = top >= n ? top - n : 0;

    // stored coefficient sets, padded with {0} through every coordinate the
    // search touches
    std::vector<ElemSet> es;
    for (std::size_t i = 0; i <= std::max(top, dq + n); ++i) es.push_back(e.at(i));

    // difference sets E_i - r for the leftover coordinates, shared by all
    // leaves of the q search
    std::vector<std::vector<ElemSet>> diff(n, std::vector<ElemSet>(s.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (ElementId r = 0; r < s.size(); ++r)
            diff[i][r] = sumset(s, es[i], s.singleton(s.neg(r)));

    // representatives found, keyed by mixed-radix rep index when small
    std::size_t rep_space = 1;
    bool flat = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (rep_space > 4096 / s.size()) {
            flat = false;
            break;
        }
        rep_space *= s.size();
    }
    std::vector<bool> found_flat(flat ? rep_space : 0, false);
    std::set<std::vector<ElementId>> found_map;

    // For each q (coefficients free, zero top included so all lower degrees
    // are covered) the coordinates >= n force E_i to meet (q*p)_i; the
    // leftover coordinates < n generate the box of representatives. q is
    // assigned from the top coefficient down, checking coordinate j+n as
    // soon as q_j lands.
    std::vector<ElementId> q(dq + 1, s.zero());

    auto conv = [&](std::size_t i) {
        ElemSet acc = s.singleton(s.zero());
        for (std::size_t k = 0; k <= std::min(i, dq); ++k)
            acc = sumset(s, acc, s.prod(q[k], p.coeff(i - k)));
        return acc;
    };

    std::vector<std::vector<ElementId>> r_choices(n);
    auto collect = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            const ElemSet conv_i = conv(i);
            r_choices[i].clear();
            for (ElementId r = 0; r < s.size(); ++r)
                if (diff[i][r].intersects(conv_i)) r_choices[i].push_back(r);
            if (r_choices[i].empty()) return;
        }
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            if (flat) {
                std::size_t key = 0;
                for (std::size_t i = n; i-- > 0;)
                    key = key * s.size() + r_choices[i][idx[i]];
                found_flat[key] = true;
            } else {
                std::vector<ElementId> rc(n);
                for (std::size_t i = 0; i < n; ++i) rc[i] = r_choices[i][idx[i]];
                found_map.insert(std::move(rc));
            }
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++idx[i] < r_choices[i].size()) break;
                idx[i] = 0;
            }
            if (i == n) break;
        }
    };

    auto rec = [&](auto&& self, std::size_t jplus) -> void {
        if (jplus == 0) {
            collect();
            return;
        }
        const std::size_t j = jplus - 1;
        for (ElementId cand = 0; cand < s.size(); ++cand) {
            q[j] = cand;
            if (es[j + n].intersects(conv(j + n))) self(self, j);
        }
        q[j] = s.zero();
    };
    rec(rec, dq + 1);

    std::vector<Poly> out;
    if (flat) {
        for (std::size_t key = 0; key < rep_space; ++key) {
            if (!found_flat[key]) continue;
            std::vector<ElementId> rc(n);
            std::size_t rest = key;
            for (std::size_t i = 0; i < n; ++i) {
                rc[i] = static_cast<ElementId>(rest % s.size());
                rest /= s.size();
            }
            out.push_back(Poly::from_coeffs(sp, std::move(rc)));
        }
    } else {
        for (const auto& rc : found_map) out.push_back(Poly::from_coeffs(sp, rc));
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<Poly> reduce(const Poly& h, const Poly& p) {
    return reduce_envelope(envelope_of(h), p);
}

ElementId QuotientField::class_of(const Poly& rep) const {
    if (!rep.is_zero() && rep.degree() >= modulus_.degree())
        throw DomainError("class_of: representative degree too large");
    for (ElementId c = 0; c < reps_.size(); ++c)
        if (reps_[c] == rep) return c;
    throw DomainError("class_of: representative not found");
}

ElemSet QuotientField::classes_of(const Poly& h) const {
    return classes_of_envelope(envelope_of(h));
}

ElemSet QuotientField::classes_of_envelope(const CoeffEnvelope& e) const {
    ElemSet out(class_count());
    for (const Poly& rep : reduce_envelope(e, modulus_)) out.insert(class_of(rep));
    return out;
}

QuotientField make_quotient(const SuperringPtr& f, const Poly& p, QuotientMode mode,
                            unsigned sat_degree) {
    if (p.structure() != f && !equal_elementwise(*p.structure(), *f))
        throw DomainError("make_quotient: modulus not over the base structure");
    if (!f->report().superfield)
        throw DomainError("make_quotient: base must be a validated superfield");
    const IrredResult ir = is_irreducible(p);
    if (!ir.irreducible) throw DomainError("make_quotient: modulus is reducible");

    const FiniteSuperring& s = *f;
    const std::size_t n = p.degree();
    if (mode == QuotientMode::Saturated && sat_degree == 0)
        sat_degree = static_cast<unsigned>(2 * n);

    // carrier: classes of all polynomials of degree < n, canonical order
    std::vector<Poly> reps{Poly::zero(f)};
    for (std::size_t d = 0; d < n; ++d) {
        PolyEnumerator en(f, d);
        while (auto r = en.next()) reps.push_back(*r);
    }
    const auto m = static_cast<std::uint32_t>(reps.size());
    std::map<std::vector<ElementId>, ElementId> index;
    for (ElementId c = 0; c < m; ++c) index[reps[c].coeffs()] = c;

    auto class_id = [&](const Poly& rep) { return index.at(rep.coeffs()); };
    auto class_set = [&](const std::vector<Poly>& rs) {
        ElemSet out(m);
        for (const Poly& r : rs) out.insert(class_id(r));
        return out;
    };

    // Representative pool: canonical reps in Strict mode, every polynomial
    // up to the saturation degree otherwise. The zero class keeps only the
    // zero polynomial as representative: reduce is multivalued on ideal
    // members (the class relation is not transitive), and letting them act
    // for [0] would break the absorbing law of the quotient.
    std::vector<Poly> pool;
    std::vector<ElemSet> pool_classes;
    if (mode == QuotientMode::Strict) {
        pool = reps;
        for (ElementId c = 0; c < m; ++c) pool_classes.push_back(ElemSet::singleton(m, c));
    } else {
        pool.push_back(Poly::zero(f));
        pool_classes.push_back(ElemSet::singleton(m, 0));
        for (std::size_t d = 0; d <= sat_degree; ++d) {
            PolyEnumerator en(f, d);
            while (auto h = en.next()) {
                ElemSet cs = class_set(reduce(*h, p));
                if (cs.contains(0)) {
                    ElemSet without(m);
                    cs.for_each([&](ElementId u) { if (u != 0) without.insert(u); });
                    cs = without;
                }
                if (cs.empty()) continue;
                pool.push_back(*h);
                pool_classes.push_back(cs);
            }
        }
    }

    std::vector<ElemSet> sum(std::size_t{m} * m, ElemSet(m));
    std::vector<ElemSet> prod(std::size_t{m} * m, ElemSet(m));

    for (ElementId a = 0; a < m; ++a)
        for (ElementId b = a; b < m; ++b) {
            ElemSet v(m);
            for (const Poly& z : poly_sum(reps[a], reps[b]).members())
                v.insert(class_id(z));
            sum[a * m + b] = v;
            sum[b * m + a] = v;
        }

    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            const ElemSet c = class_set(reduce_envelope(poly_prod(pool[i], pool[j]), p));
            pool_classes[i].for_each([&](ElementId u) {
                pool_classes[j].for_each([&](ElementId v) {
                    prod[u * m + v].unite(c);
                    prod[v * m + u].unite(c);
                });
            });
        }

    std::vector<ElementId> neg(m);
    for (ElementId c = 0; c < m; ++c) neg[c] = class_id(reps[c].negated());

    std::vector<std::string> names;
    names.reserve(m);
    for (const Poly& r : reps) names.push_back("[" + poly_compact_string(r) + "]");

    SuperringPtr structure = FiniteSuperring::create(
        s.name() + "(" + poly_to_string(p) + ")", std::move(names), 0,
        class_id(Poly::constant(f, s.one())), std::move(neg), std::move(sum), std::move(prod));

    std::vector<ElementId> emb(s.size());
    for (ElementId a = 0; a < s.size(); ++a) emb[a] = class_id(Poly::constant(f, a));
    MorphismTable embedding(f, structure, std::move(emb));
    const bool full = classify_map(embedding).cls == MorphismClass::FullMorphism;

    structure->report(); // re-validate eagerly; cached on the structure

    return QuotientField(f, p, mode, sat_degree, structure, std::move(embedding), full,
                         std::move(reps));
}

std::optional<ElementId> class_inverse_constructive(const QuotientField& q, ElementId c) {
    const FiniteSuperring& cls = *q.structure();
    const SuperringPtr& base = q.base();
    if (c == cls.zero()) throw DomainError("class_inverse: zero class");

    const Poly& rep = q.rep_of(c);
    if (rep.degree() == 0) {
        const ElemSet inv = inverses(*base, rep.coeff(0));
        if (inv.empty()) return std::nullopt;
        const ElementId cand = q.class_of(Poly::constant(base, inv.first()));
        if (cls.prod(c, cand).contains(cls.one())) return cand;
        return std::nullopt;
    }

    // p in rep*u + r with deg r < deg rep; then an inverse of [rep] lies in
    // -[u][r^-1]. The remainder is a unit by irreducibility of p.
    const Division d = euclid_divide(q.modulus(), rep);
    if (d.r.is_zero()) return std::nullopt;
    const ElementId r_class = q.class_of(d.r);
    auto r_inv = class_inverse_constructive(q, r_class);
    if (!r_inv) return std::nullopt;

    const ElemSet candidates = prodset(cls, cls.singleton(q.class_of(d.q)),
                                       cls.singleton(*r_inv));
    std::optional<ElementId> found;
    negset(cls, candidates).for_each([&](ElementId t) {
        if (!found && cls.prod(c, t).contains(cls.one())) found = t;
    });
    return found;
}

ElementId adjoined_root(const QuotientField& q) {
    const ElemSet classes = q.classes_of(Poly::monomial(q.base(), q.base()->one(), 1));
    if (classes.empty()) throw Error("adjoined_root: the indeterminate has no reduct");
    return classes.first();
}

ElementId class_inverse(const QuotientField& q, ElementId c) {
    const FiniteSuperring& cls = *q.structure();
    if (c == cls.zero()) throw DomainError("class_inverse: zero class");

    std::optional<ElementId> scan;
    for (ElementId g = 0; g < cls.size() && !scan; ++g)
        if (cls.prod(c, g).contains(cls.one())) scan = g;
    if (!scan) throw Error("class_inverse: no inverse found by exhaustive scan");

    const auto constructive = class_inverse_constructive(q, c);
    if (!constructive)
        throw Error("class_inverse: constructive route failed for class " +
                    cls.element_name(c));
    if (!cls.prod(c, *constructive).contains(cls.one()))
        throw Error("class_inverse: constructive witness fails verification");
    return *scan;
}

} // namespace multikit

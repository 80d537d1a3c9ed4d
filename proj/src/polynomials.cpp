#include "multikit/polynomials.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace multikit {

Poly::Poly(SuperringPtr s, std::vector<ElementId> coeffs)
    : s_(std::move(s)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == s_->zero()) coeffs_.pop_back();
    for (ElementId c : coeffs_)
        if (c >= s_->size()) throw DomainError("polynomial coefficient out of range");
}

Poly Poly::constant(SuperringPtr s, ElementId c) { return Poly(std::move(s), {c}); }

Poly Poly::from_coeffs(SuperringPtr s, std::vector<ElementId> coeffs) {
    return Poly(std::move(s), std::move(coeffs));
}

Poly Poly::monomial(SuperringPtr s, ElementId c, std::size_t k) {
    std::vector<ElementId> coeffs(k + 1, s->zero());
    coeffs[k] = c;
    return Poly(std::move(s), std::move(coeffs));
}

std::size_t Poly::degree() const {
    if (coeffs_.empty()) throw DomainError("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

ElementId Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : s_->zero();
}

Poly Poly::negated() const {
    std::vector<ElementId> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = s_->neg(coeffs_[i]);
    return Poly(s_, std::move(c));
}

Poly Poly::mapped(const MorphismTable& m) const {
    if (m.domain() != s_ && !equal_elementwise(*m.domain(), *s_))
        throw DomainError("Poly::mapped: morphism domain mismatch");
    std::vector<ElementId> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = m(coeffs_[i]);
    return Poly(m.codomain(), std::move(c));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = a.length(); i-- > 0;)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

CoeffEnvelope::CoeffEnvelope(SuperringPtr s, std::vector<ElemSet> sets)
    : s_(std::move(s)), sets_(std::move(sets)) {
    const ElemSet zero_only = ElemSet::singleton(s_->size(), s_->zero());
    for (const ElemSet& e : sets_)
        if (e.empty()) throw DomainError("empty coefficient set in envelope");
    while (!sets_.empty() && sets_.back() == zero_only) sets_.pop_back();
}

ElemSet CoeffEnvelope::at(std::size_t i) const {
    return i < sets_.size() ? sets_[i] : ElemSet::singleton(s_->size(), s_->zero());
}

std::size_t CoeffEnvelope::member_count() const {
    std::size_t acc = 1;
    for (const ElemSet& e : sets_) {
        const std::size_t k = e.count();
        if (acc > SIZE_MAX / k) return SIZE_MAX;
        acc *= k;
    }
    return acc;
}

std::vector<Poly> CoeffEnvelope::members(std::size_t bound) const {
    if (member_count() > bound)
        throw LimitError("envelope expansion beyond the configured bound of " +
                         std::to_string(bound) + " members");
    std::vector<std::vector<ElementId>> choices;
    choices.reserve(sets_.size());
    for (const ElemSet& e : sets_) choices.push_back(e.indices());

    std::vector<Poly> out;
    std::vector<std::size_t> idx(sets_.size(), 0);
    while (true) {
        std::vector<ElementId> coeffs(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) coeffs[i] = choices[i][idx[i]];
        out.push_back(Poly::from_coeffs(s_, std::move(coeffs)));
        std::size_t i = 0;
        for (; i < sets_.size(); ++i) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
        }
        if (i == sets_.size()) break;
        if (sets_.empty()) break;
    }
    return out;
}

namespace {

void check_same_structure(const Poly& f, const Poly& g) {
    if (f.structure() != g.structure() && !equal_elementwise(*f.structure(), *g.structure()))
        throw DomainError("polynomial operands over different carriers");
}

} // namespace

CoeffEnvelope poly_sum(const Poly& f, const Poly& g) {
    check_same_structure(f, g);
    const FiniteSuperring& s = *f.structure();
    const std::size_t len = std::max(f.length(), g.length());
    std::vector<ElemSet> sets;
    sets.reserve(len);
    for (std::size_t i = 0; i < len; ++i) sets.push_back(s.sum(f.coeff(i), g.coeff(i)));
    return {f.structure(), std::move(sets)};
}

CoeffEnvelope poly_prod(const Poly& f, const Poly& g) {
    check_same_structure(f, g);
    const FiniteSuperring& s = *f.structure();
    if (f.is_zero() || g.is_zero()) return {f.structure(), {}};
    const std::size_t len = f.degree() + g.degree() + 1;
    std::vector<ElemSet> sets;
    sets.reserve(len);
    for (std::size_t n = 0; n < len; ++n) {
        std::vector<ElemSet> terms;
        terms.reserve(n + 1);
        for (std::size_t j = 0; j <= n; ++j)
            terms.push_back(s.prod(f.coeff(j), g.coeff(n - j)));
        sets.push_back(nary_sum(s, terms));
    }
    return {f.structure(), std::move(sets)};
}

CoeffEnvelope envelope_of(const Poly& f) {
    const FiniteSuperring& s = *f.structure();
    std::vector<ElemSet> sets;
    sets.reserve(f.length());
    for (std::size_t i = 0; i < f.length(); ++i)
        sets.push_back(ElemSet::singleton(s.size(), f.coeff(i)));
    return {f.structure(), std::move(sets)};
}

CoeffEnvelope envelope_neg(const CoeffEnvelope& e) {
    const FiniteSuperring& s = *e.structure();
    std::vector<ElemSet> sets;
    sets.reserve(e.length());
    for (std::size_t i = 0; i < e.length(); ++i) sets.push_back(negset(s, e.at(i)));
    return {e.structure(), std::move(sets)};
}

CoeffEnvelope envelope_sum(const CoeffEnvelope& a, const CoeffEnvelope& b) {
    const FiniteSuperring& s = *a.structure();
    const std::size_t len = std::max(a.length(), b.length());
    std::vector<ElemSet> sets;
    sets.reserve(len);
    for (std::size_t i = 0; i < len; ++i) sets.push_back(sumset(s, a.at(i), b.at(i)));
    return {a.structure(), std::move(sets)};
}

CoeffEnvelope envelope_add_poly(const CoeffEnvelope& e, const Poly& r) {
    const FiniteSuperring& s = *e.structure();
    const std::size_t len = std::max(e.length(), r.length());
    std::vector<ElemSet> sets;
    sets.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        sets.push_back(sumset(s, e.at(i), ElemSet::singleton(s.size(), r.coeff(i))));
    return {e.structure(), std::move(sets)};
}

bool member(const Poly& h, const CoeffEnvelope& e) {
    const std::size_t len = std::max(h.length(), e.length());
    for (std::size_t i = 0; i < len; ++i)
        if (!e.at(i).contains(h.coeff(i))) return false;
    return true;
}

ElemSet evaluate(const Poly& f, ElementId alpha, const SuperringPtr& ambient,
                 const MorphismTable* emb) {
    const FiniteSuperring& k = *ambient;
    if (alpha >= k.size()) throw DomainError("evaluate: point outside the ambient carrier");

    std::vector<ElementId> coeffs(f.length());
    if (emb) {
        if (emb->domain() != f.structure() && !equal_elementwise(*emb->domain(), *f.structure()))
            throw DomainError("evaluate: polynomial not over the embedding domain");
        if (emb->codomain() != ambient && !equal_elementwise(*emb->codomain(), *ambient))
            throw DomainError("evaluate: embedding codomain is not the ambient");
        if (classify_map(*emb).cls == MorphismClass::NotMorphism)
            throw DomainError("evaluate: coefficient embedding is not a morphism");
        for (std::size_t i = 0; i < f.length(); ++i) coeffs[i] = (*emb)(f.coeff(i));
    } else {
        if (f.structure() != ambient && !equal_elementwise(*f.structure(), *ambient))
            throw DomainError("evaluate: polynomial not over the ambient (embedding required)");
        for (std::size_t i = 0; i < f.length(); ++i) coeffs[i] = f.coeff(i);
    }

    if (coeffs.empty()) return k.singleton(k.zero());

    ElemSet acc = k.singleton(coeffs[0]);
    ElemSet power = k.singleton(k.one());
    const ElemSet alpha_set = k.singleton(alpha);
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        power = (i == 1) ? alpha_set : prodset(k, power, alpha_set);
        acc = sumset(k, acc, prodset(k, k.singleton(coeffs[i]), power));
    }
    return acc;
}

ElemSet roots(const Poly& f, const SuperringPtr& ambient, const MorphismTable* emb) {
    if (f.is_zero()) throw DomainError("roots: zero polynomial");
    const FiniteSuperring& k = *ambient;
    ElemSet out(k.size());
    for (ElementId alpha = 0; alpha < k.size(); ++alpha)
        if (evaluate(f, alpha, ambient, emb).contains(k.zero())) out.insert(alpha);
    return out;
}

ElemSet effective_roots(const Poly& f, const SuperringPtr& ambient) {
    if (f.is_zero()) throw DomainError("effective_roots: zero polynomial");
    const FiniteSuperring& s = *ambient;
    if (f.structure() != ambient && !equal_elementwise(*f.structure(), *ambient))
        throw DomainError("effective_roots: polynomial not over the ambient");
    if (!s.report().superdomain)
        throw DomainError("effective_roots: ambient must be a superdomain (degree additivity)");

    ElemSet out(s.size());
    const std::size_t n = f.degree();
    if (n == 0) return out;

    for (ElementId alpha = 0; alpha < s.size(); ++alpha) {
        const ElementId w = s.neg(alpha);
        // constraint at index k: f_k in w*g_k + 1*g_{k-1}; assign g_0..g_{n-1}
        std::vector<ElementId> g(n, s.zero());
        auto coeff_ok = [&](std::size_t k) {
            ElemSet lhs = s.prod(w, g[k]);
            if (k > 0) lhs = sumset(s, lhs, s.prod(s.one(), g[k - 1]));
            return lhs.contains(f.coeff(k));
        };
        auto rec = [&](auto&& self, std::size_t k) -> bool {
            if (k == n) {
                if (g[n - 1] == s.zero()) return false; // deg g pinned to n-1
                return s.prod(s.one(), g[n - 1]).contains(f.coeff(n));
            }
            for (ElementId cand = 0; cand < s.size(); ++cand) {
                g[k] = cand;
                if (coeff_ok(k) && self(self, k + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0)) out.insert(alpha);
    }
    return out;
}

namespace {

struct DivisionSearch {
    const SuperringPtr& sp;
    const Poly& g;
    std::size_t m;      // deg g
    ElementId lead_inv; // smallest-index inverse of the leading coefficient
    std::size_t budget = 500000;

    bool search(const Poly& f, Division& out) {
        const FiniteSuperring& s = *sp;
        if (f.is_zero() || f.degree() < m) {
            out = {Poly::zero(sp), f};
            return true;
        }
        const std::size_t n = f.degree();
        const ElementId an = f.coeff(n);

        bool found = false;
        s.prod(an, lead_inv).for_each([&](ElementId c) {
            if (found) return;
            // t ranges over f - c X^{n-m} g with deg t < n
            const CoeffEnvelope lead = poly_prod(Poly::monomial(sp, c, n - m), g);
            std::vector<ElemSet> diff;
            diff.reserve(n + 1);
            for (std::size_t i = 0; i <= n; ++i)
                diff.push_back(sumset(s, s.singleton(f.coeff(i)), negset(s, lead.at(i))));
            if (!diff[n].contains(s.zero())) return;

            std::vector<std::vector<ElementId>> choices;
            choices.reserve(n);
            for (std::size_t i = 0; i < n; ++i) choices.push_back(diff[i].indices());

            std::vector<std::size_t> idx(n, 0);
            while (!found) {
                if (budget-- == 0)
                    throw LimitError("euclid_divide: search budget exhausted");
                std::vector<ElementId> tc(n);
                for (std::size_t i = 0; i < n; ++i) tc[i] = choices[i][idx[i]];
                Poly t = Poly::from_coeffs(sp, std::move(tc));

                Division sub{Poly::zero(sp), Poly::zero(sp)};
                if (search(t, sub)) {
                    std::vector<ElementId> qc(std::max<std::size_t>(sub.q.length(), n - m + 1),
                                              s.zero());
                    for (std::size_t i = 0; i < sub.q.length(); ++i) qc[i] = sub.q.coeff(i);
                    qc[n - m] = c;
                    Poly q = Poly::from_coeffs(sp, std::move(qc));
                    if (member(f, envelope_add_poly(poly_prod(q, g), sub.r))) {
                        out = {std::move(q), sub.r};
                        found = true;
                        return;
                    }
                }

                std::size_t i = 0;
                for (; i < n; ++i) {
                    if (++idx[i] < choices[i].size()) break;
                    idx[i] = 0;
                }
                if (i == n) break;
            }
        });
        return found;
    }
};

} // namespace

Division euclid_divide(const Poly& f, const Poly& g) {
    check_same_structure(f, g);
    if (g.is_zero()) throw DomainError("euclid_divide: division by the zero polynomial");
    const SuperringPtr& sp = f.structure();
    if (!sp->report().superfield)
        throw DomainError("euclid_divide: the coefficient structure must be a superfield");

    const ElemSet inv = inverses(*sp, g.coeff(g.degree()));
    DivisionSearch ds{sp, g, g.degree(), inv.first()};
    Division out{Poly::zero(sp), Poly::zero(sp)};
    if (!ds.search(f, out))
        throw Error("euclid_divide: no witness found (structure violates the division theorem)");
    return out;
}

std::vector<Division> enumerate_divisions(const Poly& f, const Poly& g) {
    check_same_structure(f, g);
    if (g.is_zero()) throw DomainError("enumerate_divisions: division by the zero polynomial");
    const SuperringPtr& sp = f.structure();
    const FiniteSuperring& s = *sp;
    const std::size_t m = g.degree();

    std::vector<Poly> q_candidates{Poly::zero(sp)};
    if (!f.is_zero() && f.degree() >= m) {
        const std::size_t dmax = f.degree() - m;
        for (std::size_t d = 0; d <= dmax; ++d) {
            PolyEnumerator en(sp, d);
            while (auto q = en.next()) q_candidates.push_back(*q);
        }
    }

    std::vector<Division> out;
    for (const Poly& q : q_candidates) {
        const CoeffEnvelope e = q.is_zero() ? CoeffEnvelope(sp, {}) : poly_prod(q, g);
        const std::size_t len = std::max({e.length(), f.length(), m});
        bool feasible = true;
        for (std::size_t i = m; i < len && feasible; ++i)
            if (!e.at(i).contains(f.coeff(i))) feasible = false;
        if (!feasible) continue;

        std::vector<std::vector<ElementId>> r_choices(m);
        for (std::size_t i = 0; i < m && feasible; ++i) {
            for (ElementId x = 0; x < s.size(); ++x)
                if (sumset(s, e.at(i), s.singleton(x)).contains(f.coeff(i)))
                    r_choices[i].push_back(x);
            if (r_choices[i].empty()) feasible = false;
        }
        if (!feasible) continue;

        std::vector<std::size_t> idx(m, 0);
        while (true) {
            std::vector<ElementId> rc(m);
            for (std::size_t i = 0; i < m; ++i) rc[i] = r_choices[i][idx[i]];
            out.push_back({q, Poly::from_coeffs(sp, std::move(rc))});
            std::size_t i = 0;
            for (; i < m; ++i) {
                if (++idx[i] < r_choices[i].size()) break;
                idx[i] = 0;
            }
            if (i == m) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// text syntax

namespace {

std::vector<std::string> split_terms(const std::string& text) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    terms.push_back(cur);
    return terms;
}

bool parse_power(const std::string& part, std::size_t& k) {
    if (part == "X") {
        k = 1;
        return true;
    }
    if (part.size() >= 3 && part[0] == 'X' && part[1] == '^') {
        unsigned v = 0;
        auto [p, ec] = std::from_chars(part.data() + 2, part.data() + part.size(), v);
        if (ec != std::errc() || p != part.data() + part.size()) return false;
        k = v;
        return true;
    }
    return false;
}

} // namespace

Poly parse_poly(const SuperringPtr& sp, const std::string& text) {
    const FiniteSuperring& s = *sp;
    std::vector<ElementId> coeffs;
    auto add_term = [&](ElementId c, std::size_t k) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, s.zero());
        if (coeffs[k] != s.zero())
            throw ParseError("duplicate coefficient for X^" + std::to_string(k), 1, 1);
        coeffs[k] = c;
    };

    int termno = 0;
    for (const std::string& term : split_terms(text)) {
        ++termno;
        if (term.empty()) throw ParseError("empty polynomial term", 1, termno);
        std::size_t k = 0;
        if (auto star = term.rfind('*'); star != std::string::npos) {
            const std::string cname = term.substr(0, star);
            if (!parse_power(term.substr(star + 1), k))
                throw ParseError("expected X or X^k after '*' in '" + term + "'", 1, termno);
            auto c = s.find_element(cname);
            if (!c) throw ParseError("unknown element '" + cname + "'", 1, termno);
            add_term(*c, k);
        } else if (parse_power(term, k)) {
            add_term(s.one(), k);
        } else {
            auto c = s.find_element(term);
            if (!c) throw ParseError("unknown element '" + term + "'", 1, termno);
            add_term(*c, 0);
        }
    }
    return Poly::from_coeffs(sp, std::move(coeffs));
}

std::string poly_to_string(const Poly& f) {
    const FiniteSuperring& s = *f.structure();
    if (f.is_zero()) return s.element_name(s.zero());
    std::string out;
    for (std::size_t i = f.length(); i-- > 0;) {
        const ElementId c = f.coeff(i);
        if (c == s.zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += s.element_name(c);
            continue;
        }
        if (c != s.one()) out += s.element_name(c) + "*";
        out += "X";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string poly_compact_string(const Poly& f) {
    const FiniteSuperring& s = *f.structure();
    if (f.is_zero()) return s.element_name(s.zero());
    std::string out;
    for (std::size_t i = 0; i < f.length(); ++i) {
        const ElementId c = f.coeff(i);
        if (c == s.zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += s.element_name(c);
            continue;
        }
        if (c != s.one()) out += s.element_name(c);
        out += "X";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

PolyEnumerator::PolyEnumerator(SuperringPtr s, std::size_t degree, bool reversed)
    : s_(std::move(s)), degree_(degree), reversed_(reversed), pos_(degree + 1, 0) {}

std::optional<Poly> PolyEnumerator::next() {
    const FiniteSuperring& s = *s_;
    const std::uint32_t n = s.size();

    auto element_at = [&](std::size_t coeff_idx, std::uint32_t step) -> std::optional<ElementId> {
        // top coefficient skips zero
        const bool top = coeff_idx == degree_;
        std::uint32_t count = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            const ElementId e = reversed_ ? (n - 1 - i) : i;
            if (top && e == s.zero()) continue;
            if (count == step) return e;
            ++count;
        }
        return std::nullopt;
    };

    if (done_) return std::nullopt;

    std::vector<ElementId> coeffs(degree_ + 1);
    for (std::size_t i = 0; i <= degree_; ++i) {
        auto e = element_at(i, pos_[i]);
        if (!e) return std::nullopt; // single-element carrier has no nonzero top
        coeffs[i] = *e;
    }
    Poly out = Poly::from_coeffs(s_, std::move(coeffs));

    // advance: coefficient 0 varies fastest (canonical order compares the
    // highest coefficient first)
    std::size_t i = 0;
    for (; i <= degree_; ++i) {
        const std::uint32_t limit = (i == degree_) ? n - 1 : n;
        if (++pos_[i] < limit) break;
        pos_[i] = 0;
    }
    if (i > degree_) done_ = true;
    return out;
}

} // namespace multikit

#ifndef MULTIKIT_POLYNOMIALS_HPP
#define MULTIKIT_POLYNOMIALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "multikit/morphisms.hpp"
#include "multikit/superring.hpp"

namespace multikit {

/// Finite-support coefficient sequence over a carrier. Trailing zeros are
/// trimmed; the zero polynomial is the empty sequence and has no degree.
class Poly {
public:
    static Poly zero(SuperringPtr s) { return Poly(std::move(s), {}); }
    static Poly constant(SuperringPtr s, ElementId c);
    static Poly from_coeffs(SuperringPtr s, std::vector<ElementId> coeffs);
    /// c * X^k
    static Poly monomial(SuperringPtr s, ElementId c, std::size_t k);

    const SuperringPtr& structure() const { return s_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Largest index with nonzero coefficient; throws on the zero polynomial.
    std::size_t degree() const;
    std::size_t length() const { return coeffs_.size(); }
    ElementId coeff(std::size_t i) const;
    const std::vector<ElementId>& coeffs() const { return coeffs_; }

    Poly negated() const;
    /// Map coefficients through a morphism into its codomain.
    Poly mapped(const MorphismTable& m) const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    Poly(SuperringPtr s, std::vector<ElementId> coeffs);
    SuperringPtr s_;
    std::vector<ElementId> coeffs_;
};

/// Canonical comparison: by degree, then coefficients from the highest
/// index down, each by element index. Zero sorts first.
bool poly_less(const Poly& a, const Poly& b);

/// Sequence of coefficient sets denoting a box of polynomials: h belongs
/// iff h_i lies in the i-th set for every i, with implicit {0} beyond the
/// stored length. Each stored set is non-empty; trailing {0} sets trimmed.
class CoeffEnvelope {
public:
    CoeffEnvelope(SuperringPtr s, std::vector<ElemSet> sets);

    const SuperringPtr& structure() const { return s_; }
    std::size_t length() const { return sets_.size(); }
    /// Coefficient set at index i ({0} beyond the stored length).
    ElemSet at(std::size_t i) const;
    const std::vector<ElemSet>& sets() const { return sets_; }

    /// Number of member polynomials (product of the set sizes).
    std::size_t member_count() const;
    /// Explicit member list in canonical order; refuses to expand beyond
    /// `bound` members (the envelopes grow multiplicatively).
    std::vector<Poly> members(std::size_t bound = 4096) const;

private:
    SuperringPtr s_;
    std::vector<ElemSet> sets_;
};

/// Coefficientwise sum envelope: c_i = f_i + g_i.
CoeffEnvelope poly_sum(const Poly& f, const Poly& g);
/// Convolution envelope: c_n = f_0 g_n + f_1 g_{n-1} + ... + f_n g_0,
/// folded left-nested.
CoeffEnvelope poly_prod(const Poly& f, const Poly& g);

CoeffEnvelope envelope_of(const Poly& f);
CoeffEnvelope envelope_neg(const CoeffEnvelope& e);
/// Coefficientwise set sum of two envelopes.
CoeffEnvelope envelope_sum(const CoeffEnvelope& a, const CoeffEnvelope& b);
/// E with a single polynomial added coefficientwise (E "boxplus" r).
CoeffEnvelope envelope_add_poly(const CoeffEnvelope& e, const Poly& r);

bool member(const Poly& h, const CoeffEnvelope& e);

/// ev(alpha, f, K): left-nested sum of h(a_i) * alpha^i with set-powers of
/// alpha. The ambient K is always explicit; `emb` maps the coefficient
/// structure into K and must classify at least as a morphism (identity when
/// omitted and f is over K).
ElemSet evaluate(const Poly& f, ElementId alpha, const SuperringPtr& ambient,
                 const MorphismTable* emb = nullptr);

/// {alpha : 0 in ev(alpha, f, K)}, exhaustively.
ElemSet roots(const Poly& f, const SuperringPtr& ambient, const MorphismTable* emb = nullptr);

/// {alpha : f in (X - alpha) * g for some g}. Requires a superdomain
/// ambient so deg g is pinned to deg f - 1; g is found by coefficientwise
/// constraint propagation with backtracking.
ElemSet effective_roots(const Poly& f, const SuperringPtr& ambient);

struct Division {
    Poly q, r;
};

/// Witness (q, r) with f in q*g + r and r = 0 or deg r < deg g, following
/// the leading-coefficient elimination of the division theorem; set-valued
/// choice points are resolved canonical-order-first with backtracking until
/// the membership postcondition verifies. Requires a validated superfield.
Division euclid_divide(const Poly& f, const Poly& g);

/// All division pairs with deg q <= deg f - deg g, canonical order.
std::vector<Division> enumerate_divisions(const Poly& f, const Poly& g);

/// Term syntax "c*X^k", "X^k", "X", "c" joined by '+' at bracket depth 0.
Poly parse_poly(const SuperringPtr& s, const std::string& text);
std::string poly_to_string(const Poly& f);

/// Compact ascending rendering used in quotient class names: "1+X", "2X",
/// "2+2X^2". Not meant to be re-parsed as a polynomial.
std::string poly_compact_string(const Poly& f);

/// Iteration order used by root/witness searches: degree ascending, then
/// canonical coefficient order. `reversed` flips the element order inside
/// each coefficient position (used by the closure-order probe).
class PolyEnumerator {
public:
    PolyEnumerator(SuperringPtr s, std::size_t degree, bool reversed = false);
    std::optional<Poly> next();

private:
    SuperringPtr s_;
    std::size_t degree_;
    bool reversed_;
    bool done_ = false;
    std::vector<std::uint32_t> pos_; // pos_[i] counts choices at coefficient i
};

} // namespace multikit

#endif

#ifndef MULTIKIT_QUOTIENTS_HPP
#define MULTIKIT_QUOTIENTS_HPP

#include <optional>

#include "multikit/polynomials.hpp"

namespace multikit {

/// Semantics of the principal ideal generated by p.
///   MultipleSet: members of some q*p envelope (requires a superdomain so
///     degree additivity pins deg q).
///   SumClosed:   members of bounded sums q1*p + ... + qk*p; over
///     characteristic-2-like structures this collapses to the unit ideal,
///     which is why the quotient construction does not use it.
enum class IdealMode { MultipleSet, SumClosed };

bool principal_membership(const Poly& f, const Poly& p, IdealMode mode,
                          unsigned max_summands = 2);

struct IrredResult {
    bool irreducible = false;
    /// factor pair (g, h) with p in g*h, when reducible
    std::optional<std::pair<Poly, Poly>> factor_witness;
    /// the divisibility-definition verdict, evaluated in multiple-set mode
    bool secondary_irreducible = false;
};

/// Primary criterion: no factorization member(p, g*h) with both degrees
/// >= 1 (exhaustive; degrees pinned by additivity). The secondary verdict
/// evaluates the divisor-based definition; both are reported.
IrredResult is_irreducible(const Poly& p);

/// All representatives r with deg r < deg p whose difference from some
/// member of `e` meets the multiple-set ideal of p. Multivalued outputs are
/// genuine. Canonically sorted.
std::vector<Poly> reduce_envelope(const CoeffEnvelope& e, const Poly& p);

/// reduce of a single polynomial: its set of low-degree reducts.
std::vector<Poly> reduce(const Poly& h, const Poly& p);

enum class QuotientMode { Strict, Saturated };

/// F[X] modulo an irreducible p: carrier = classes of all polynomials of
/// degree < deg p keyed by their (unique) low-degree representative.
///
/// Class sums never need reduction. Class products reduce the product
/// envelope; Strict multiplies canonical representatives only, Saturated(d)
/// unions over every representative of each class up to degree d first.
class QuotientField {
public:
    const SuperringPtr& base() const { return base_; }
    const Poly& modulus() const { return modulus_; }
    QuotientMode mode() const { return mode_; }
    unsigned saturation_degree() const { return sat_degree_; }

    const SuperringPtr& structure() const { return structure_; }
    const MorphismTable& embedding() const { return embedding_; }
    bool embedding_full() const { return embedding_full_; }

    std::uint32_t class_count() const { return structure_->size(); }
    ElementId class_of(const Poly& rep) const;
    const Poly& rep_of(ElementId c) const { return reps_[c]; }

    /// Multivalued reduction of an arbitrary polynomial, as a class set.
    ElemSet classes_of(const Poly& h) const;
    ElemSet classes_of_envelope(const CoeffEnvelope& e) const;

private:
    friend QuotientField make_quotient(const SuperringPtr&, const Poly&, QuotientMode, unsigned);
    QuotientField(SuperringPtr base, Poly modulus, QuotientMode mode, unsigned sat_degree,
                  SuperringPtr structure, MorphismTable embedding, bool embedding_full,
                  std::vector<Poly> reps)
        : base_(std::move(base)), modulus_(std::move(modulus)), mode_(mode),
          sat_degree_(sat_degree), structure_(std::move(structure)),
          embedding_(std::move(embedding)), embedding_full_(embedding_full),
          reps_(std::move(reps)) {}

    SuperringPtr base_;
    Poly modulus_;
    QuotientMode mode_;
    unsigned sat_degree_;
    SuperringPtr structure_;
    MorphismTable embedding_;
    bool embedding_full_;
    std::vector<Poly> reps_;
};

/// Build F(p). `sat_degree` 0 means the default 2*deg(p) in Saturated mode.
/// Requires is_irreducible(p); the result is re-validated (report available
/// on the structure) and the canonical embedding's fullness recorded.
QuotientField make_quotient(const SuperringPtr& f, const Poly& p,
                            QuotientMode mode = QuotientMode::Strict, unsigned sat_degree = 0);

/// Canonical-order-first witness g with [1] in [c][g], computed by
/// exhaustive scan and cross-checked against the constructive
/// divide-and-invert route; throws if either route fails.
ElementId class_inverse(const QuotientField& q, ElementId c);

/// The constructive route alone (division of p by the representative,
/// recursive inverse of the remainder); exposed for direct testing.
std::optional<ElementId> class_inverse_constructive(const QuotientField& q, ElementId c);

/// The class the indeterminate reduces to: the adjoined root of the
/// modulus ([X] when deg p >= 2, the linear root otherwise).
ElementId adjoined_root(const QuotientField& q);

} // namespace multikit

#endif

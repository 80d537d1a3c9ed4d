#ifndef MULTIKIT_EXTENSIONS_HPP
#define MULTIKIT_EXTENSIONS_HPP

#include <functional>

#include "multikit/quotients.hpp"

namespace multikit {

/// A base structure sitting inside an ambient one through an explicit
/// coefficient embedding (identity when base == ambient).
struct ExtensionContext {
    SuperringPtr base;
    SuperringPtr ambient;
    MorphismTable embedding;

    static ExtensionContext identity(const SuperringPtr& s) {
        return {s, s, identity_morphism(s)};
    }
    static ExtensionContext over(SuperringPtr base, SuperringPtr ambient, MorphismTable emb) {
        return {std::move(base), std::move(ambient), std::move(emb)};
    }
};

/// First base-coefficient polynomial (degree then canonical order) with
/// 0 in its evaluation at alpha, searched up to degree_bound (default: the
/// ambient carrier size). Absence of a witness within the bound never
/// asserts transcendence.
std::optional<Poly> is_algebraic(const ExtensionContext& ctx, ElementId alpha,
                                 unsigned degree_bound = 0);

/// Minimum-degree irreducible witness, ties broken by canonical order.
/// Throws LimitError when no witness exists within the bound.
Poly irr_poly(const ExtensionContext& ctx, ElementId alpha, unsigned degree_bound = 0);

/// Union of all evaluations of base polynomials at gamma: the fixpoint of
/// T_{d+1} = U_a (T_d + a*gamma^{d+1}) from T_0 = image(base), terminated
/// by cycle detection on the (T, next power) pair.
ElemSet generated_set(const ExtensionContext& ctx, ElementId gamma);

struct Substructure {
    SuperringPtr structure;
    MorphismTable inclusion;            // substructure -> ambient
    std::vector<ElementId> ambient_ids; // carrier as ambient indices
    ElementId adjoined;                 // position of alpha in the substructure
};

/// Smallest subset of the ambient containing image(base) and alpha, closed
/// under the ambient sum, product, negation and inverse witnesses; closure
/// under the ambient tables is exactly what makes the inclusion full.
Substructure simple_extension(const ExtensionContext& ctx, ElementId alpha);

struct AlmostFullResult {
    bool pass = true;
    // a, b, c (base) and powers p < q < r on failure
    std::vector<ElementId> coeff_witness;
    std::vector<unsigned> power_witness;
    ElemSet lhs, rhs;
};

/// Set equality (a g^p + b g^q + c g^r) g = a g^{p+1} + b g^{q+1} + c g^{r+1}
/// for all base coefficients and distinct powers up to n_max. Requires the
/// ambient to be generated by gamma over the base.
AlmostFullResult is_almost_full(const ExtensionContext& ctx, ElementId gamma, unsigned n_max);

/// Thm-style scaling transform: from Irr(gamma) and a nonzero base element
/// a, a polynomial h with coefficients z_i in d_i * a^{-i} such that
/// 0 lies in the evaluation of h at some point of a*gamma.
Poly scale_witness(const ExtensionContext& ctx, ElementId gamma, const Poly& irr, ElementId a);

enum class WitnessRoute { Trivial, Elimination, Fallback };

struct WitnessResult {
    Poly witness;
    WitnessRoute route;
};

/// Algebraicity witness for the element written as sum of a_i gamma^i over
/// the base. Degree-0 targets are witnessed directly; two-term targets run
/// the binomial elimination loop (coefficient scaling, top-power
/// elimination, canonical-order-first choices, final evaluation check);
/// anything the constructive path cannot reach falls back to the plain
/// degree search. The route taken is reported.
WitnessResult eliminate_witness(const ExtensionContext& ctx, ElementId gamma, const Poly& irr,
                                const std::vector<ElementId>& target_coeffs,
                                unsigned fallback_bound = 0);

struct IndependenceResult {
    bool independent = true;
    std::vector<ElementId> coeff_witness; // not-all-zero dependency on failure
};

/// Exhaustive coefficient search for 0 in a_1 l_1 + ... + a_n l_n.
IndependenceResult linear_independent(const ExtensionContext& ctx,
                                      const std::vector<ElementId>& elements,
                                      unsigned max_size = 6);

/// Largest n such that the power tuple (1, l, l^2, ..., l^n) is independent
/// for every ambient element l (set semantics for repeated powers), or
/// nullopt when the bound is exceeded.
std::optional<unsigned> extension_degree(const ExtensionContext& ctx, unsigned bound = 0);

struct ClosednessResult {
    bool closed = true;
    std::optional<Poly> counterexample; // first rootless poly in canonical order
};

/// Every non-constant polynomial of degree <= max_degree over s has a root
/// in s; exhaustive over coefficients and evaluation points.
ClosednessResult is_alg_closed_up_to(const SuperringPtr& s, unsigned max_degree);

struct ExtensionStep {
    SuperringPtr base;
    SuperringPtr top;
    MorphismTable embedding; // base -> top, classifies full
    Poly modulus;            // over base
    ElementId root;          // in top
};

enum class TowerStatus { ClosedUpToBound, StepBudgetExhausted, CarrierBoundReached,
                         NoIrreducibleCandidate };

struct Tower {
    SuperringPtr base;
    std::vector<ExtensionStep> steps;
    std::vector<MorphismTable> composites; // base -> step k top, all full
    SuperringPtr top;
    TowerStatus status = TowerStatus::ClosedUpToBound;
};

struct TowerOptions {
    unsigned carrier_bound = 100;
    bool reversed_enumeration = false; // alternate polynomial order probe
};

/// Bounded constructive closure: repeatedly adjoin the first irreducible
/// rootless polynomial of degree <= max_degree until closed up to the bound
/// or the step budget runs out. Every step embedding and every composite is
/// verified full; each adjoined modulus is re-checked to have a root in the
/// step's top.
Tower closure_tower(const SuperringPtr& f, unsigned max_degree, unsigned max_steps,
                    TowerOptions opts = {});

/// Manifest of a tower: one table file per step plus embedding maps.
/// Returns the manifest text; table files are written through the callback.
std::string tower_manifest(const Tower& t,
                           const std::function<void(const std::string& filename,
                                                    const std::string& content)>& write_file);

enum class CommuteProbeOutcome { Isomorphic, NotIsomorphic, HypothesisFailed, BoundExceeded };

/// Try to compare F(p)(q) with F(q)(p). Runs only when both adjunction
/// orders stay inside the carrier bound, both moduli remain irreducible
/// over the first extension, and both towers verify almost full; otherwise
/// reports why it could not run.
CommuteProbeOutcome extension_commute_probe(const SuperringPtr& f, const Poly& p, const Poly& q,
                                            unsigned carrier_bound = 100);

} // namespace multikit

#endif

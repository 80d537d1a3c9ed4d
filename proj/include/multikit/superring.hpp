#ifndef MULTIKIT_SUPERRING_HPP
#define MULTIKIT_SUPERRING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multikit/elem_set.hpp"

namespace multikit {

class FiniteSuperring;
using SuperringPtr = std::shared_ptr<const FiniteSuperring>;

/// Outcome of one axiom check. On failure `witness` holds the
/// lexicographically first counterexample tuple in element-index order;
/// its arity depends on the axiom.
struct AxiomResult {
    bool pass = true;
    std::vector<ElementId> witness;
};

/// Full classification of a finite structure against the axiom ladder.
/// Every axiom is computed independently; the derived flags are
/// conjunctions, and `implications_ok` re-checks the expected lattice
/// (superfield => superdomain and quasi-superfield, hyperring => multiring,
/// multiring => superring) as a self-test.
struct ClassReport {
    // additive multigroup (carrier, +, -, 0)
    AxiomResult add_m1, add_m2, add_m3, add_m4;
    // multiplicative multimonoid (carrier, *, 1)
    AxiomResult mul_m3, mul_m4, mul_unit;
    // multiring-specific: every product entry is a singleton
    AxiomResult mul_single_valued;
    AxiomResult absorbing;        // a*0 = {0}
    AxiomResult weak_distrib;     // c(a+b) subset of ca+cb
    AxiomResult sign_rule;        // -(ab) = (-a)b = a(-b)
    AxiomResult distrib_equality; // c(a+b) = ca+cb
    AxiomResult nontrivial;       // 0 != 1
    AxiomResult no_zero_divisors;
    AxiomResult invertibility;    // every nonzero a has b with 1 in ab
    // Informational only: the multigroup-style inverse exchange for the
    // multiplicative part; computed only when every nonzero element is
    // invertible, and never required for any verdict.
    std::optional<AxiomResult> mul_inverse_m1;

    // On distrib_equality failure, the two computed sets at the witness.
    ElemSet distrib_lhs, distrib_rhs;

    bool additive_multigroup = false;
    bool multiplicative_multimonoid = false;
    bool multiring = false;
    bool hyperring = false;
    bool superring = false;
    bool full = false;
    bool superdomain = false;
    bool quasi_superfield = false;
    bool superfield = false;

    bool implications_ok = false;
};

/// Finite carrier with set-valued addition and multiplication tables.
///
/// Construction enforces the cheap structural invariants (total symmetric
/// tables, non-empty entries, 0 additively neutral and multiplicatively
/// absorbing, negation an involution fixing 0). The axiom ladder proper is
/// checked by validate()/report().
class FiniteSuperring {
public:
    static SuperringPtr create(std::string name,
                               std::vector<std::string> element_names,
                               ElementId zero, ElementId one,
                               std::vector<ElementId> neg,
                               std::vector<ElemSet> sum,
                               std::vector<ElemSet> prod);

    const std::string& name() const { return name_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
    const std::string& element_name(ElementId e) const { return names_[e]; }
    const std::vector<std::string>& element_names() const { return names_; }
    std::optional<ElementId> find_element(const std::string& name) const;

    ElementId zero() const { return zero_; }
    ElementId one() const { return one_; }
    ElementId neg(ElementId a) const { return neg_[a]; }
    const std::vector<ElementId>& neg_table() const { return neg_; }

    const ElemSet& sum(ElementId a, ElementId b) const { return sum_[a * size() + b]; }
    const ElemSet& prod(ElementId a, ElementId b) const { return prod_[a * size() + b]; }

    ElemSet empty_set() const { return ElemSet(size()); }
    ElemSet singleton(ElementId e) const { return ElemSet::singleton(size(), e); }
    ElemSet full_set() const { return ElemSet::full(size()); }

    /// Cached axiom-ladder classification; computed on first use.
    const ClassReport& report() const;

    /// Render a set as space-separated element names in index order.
    std::string set_to_string(const ElemSet& s) const;

private:
    FiniteSuperring() = default;

    std::string name_;
    std::vector<std::string> names_;
    ElementId zero_ = 0, one_ = 0;
    std::vector<ElementId> neg_;
    std::vector<ElemSet> sum_, prod_;

    mutable std::once_flag report_once_;
    mutable std::unique_ptr<ClassReport> report_;
};

/// Pointwise-union lifts of the tables to sets.
ElemSet sumset(const FiniteSuperring& s, const ElemSet& a, const ElemSet& b);
ElemSet prodset(const FiniteSuperring& s, const ElemSet& a, const ElemSet& b);
ElemSet negset(const FiniteSuperring& s, const ElemSet& a);

/// Left-nested folds; the empty sum is {0}, the empty product {1}.
ElemSet nary_sum(const FiniteSuperring& s, std::span<const ElemSet> items);
ElemSet nary_prod(const FiniteSuperring& s, std::span<const ElemSet> items);

ElemSet nary_sum_elems(const FiniteSuperring& s, std::span<const ElementId> items);
ElemSet nary_prod_elems(const FiniteSuperring& s, std::span<const ElementId> items);

/// {b : 1 in a*b}; may be empty or hold several members.
ElemSet inverses(const FiniteSuperring& s, ElementId a);

/// Smallest n >= 1 with 0 in the n-fold sum of 1, or 0 if the partial-sum
/// sequence cycles without ever containing 0.
unsigned characteristic(const FiniteSuperring& s);

/// Exhaustive axiom-ladder classification (uncached; prefer report()).
ClassReport validate(const FiniteSuperring& s);

/// Same carrier listing, names, constants and tables.
bool equal_elementwise(const FiniteSuperring& a, const FiniteSuperring& b);

/// Copy of `s` with new element names (positional) and structure name.
SuperringPtr rename_structure(const FiniteSuperring& s, std::string name,
                              std::vector<std::string> element_names);

} // namespace multikit

#endif

#ifndef MULTIKIT_IDEALS_HPP
#define MULTIKIT_IDEALS_HPP

#include <vector>

#include "multikit/superring.hpp"

namespace multikit {

/// A subset closed under addition and under multiplication by the whole
/// carrier, with its spectrum flags. Prime and strongly-prime are computed
/// independently (no implication between them is assumed for general
/// superrings); maximal is decided against the full enumeration.
struct IdealSet {
    ElemSet elements;
    bool prime = false;
    bool strongly_prime = false;
    bool maximal = false;
};

bool is_ideal(const FiniteSuperring& s, const ElemSet& candidate);

/// All ideals of `s`, flagged, in lexicographic subset order.
/// Exhaustive over the powerset; refuses carriers above `max_carrier`.
std::vector<IdealSet> enumerate_ideals(const FiniteSuperring& s, unsigned max_carrier = 12);

/// Quotient by the equivalence x ~ y iff (x-y) meets `ideal`. Transitivity
/// of the relation is verified exhaustively first; a violation is reported
/// as a DomainError naming the witness triple. Class tables are induced
/// from minimal-index representatives.
SuperringPtr quotient_by_ideal(const SuperringPtr& s, const ElemSet& ideal);

} // namespace multikit

#endif

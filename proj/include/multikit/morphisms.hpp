#ifndef MULTIKIT_MORPHISMS_HPP
#define MULTIKIT_MORPHISMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "multikit/superring.hpp"

namespace multikit {

/// Total element map between two structures. A table is only a candidate:
/// it may violate every morphism condition; classify_map decides what it is.
class MorphismTable {
public:
    MorphismTable(SuperringPtr domain, SuperringPtr codomain, std::vector<ElementId> map);

    const SuperringPtr& domain() const { return domain_; }
    const SuperringPtr& codomain() const { return codomain_; }
    ElementId operator()(ElementId a) const { return map_[a]; }
    const std::vector<ElementId>& map() const { return map_; }

    ElemSet image(const ElemSet& s) const;
    bool injective() const;
    bool surjective() const;

    std::string to_string() const; // "a:b,c:d,..." in domain index order

private:
    SuperringPtr domain_, codomain_;
    std::vector<ElementId> map_;
};

enum class MorphismClass { NotMorphism, Morphism, FullMorphism };

struct MorphismVerdict {
    MorphismClass cls = MorphismClass::NotMorphism;
    bool injective = false;
    bool surjective = false;
    // populated when cls == NotMorphism
    std::string failed_condition;
    std::vector<ElementId> witness;
};

/// Exhaustive check of the morphism conditions (constants, negation,
/// sum/product membership) and, beyond them, set equality of images of sums
/// and products for fullness. First failure in scan order is reported.
MorphismVerdict classify_map(const MorphismTable& m);

enum class ExtensionKind { Proto, Extension, Full };

/// How an injective candidate embeds: mere injection, morphism, or full
/// morphism. Throws DomainError when the map is not injective.
ExtensionKind extension_kind(const MorphismTable& embedding);

MorphismTable identity_morphism(const SuperringPtr& s);
MorphismTable compose(const MorphismTable& f, const MorphismTable& g);

/// Lexicographically first bijection fixing 0 and 1 that is a full morphism
/// with a full inverse, found by backtracking with invariant pruning
/// (negation fixed points, invertibility, sum-cardinality signatures).
std::optional<MorphismTable> find_isomorphism(const SuperringPtr& a, const SuperringPtr& b,
                                              unsigned max_carrier = 16);

/// Parse "a:b,c:d,..." (whitespace ignored; must be total on the domain).
MorphismTable parse_morphism(const SuperringPtr& domain, const SuperringPtr& codomain,
                             const std::string& text);

} // namespace multikit

#endif

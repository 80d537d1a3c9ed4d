#ifndef MULTIKIT_STRUCTURES_HPP
#define MULTIKIT_STRUCTURES_HPP

#include <string>
#include <string_view>

#include "multikit/superring.hpp"

namespace multikit {

/// Krasner structure {0,1} with 1+1 = {0,1}.
SuperringPtr make_krasner();

/// Sign structure {0,1,-1} with 1+(-1) = {-1,0,1}.
SuperringPtr make_q2();

/// H_p on {0,...,p-1}: x+x = everything, x+y = {x,y}, product mod p,
/// every element its own negative. Requires p prime.
SuperringPtr make_hp(unsigned p);

/// n-kaleidoscope on {0,1,-1,...,n,-n}: absolute-value-dominant sum,
/// sign-magnitude product.
SuperringPtr make_kaleidoscope(unsigned n);

/// Classical finite field of order q in {2,3,4,5,7,8,9} viewed as a
/// singleton-valued structure.
SuperringPtr make_strict(unsigned q);

/// Product of two superfields on (nonzero F x nonzero G) u {0}:
/// componentwise product, componentwise sum on nonzero pairs with 0 joining
/// exactly when both component sums contain 0. Inputs must validate as
/// superfields and so must the result.
SuperringPtr product_h(const SuperringPtr& f, const SuperringPtr& g);

/// Builtin registry used by the command surface: krasner, q2, hN (N prime),
/// xN, fQ (supported orders), l9. Returns null for unknown names.
SuperringPtr builtin_structure(const std::string& name);

/// Parse the line-oriented table format; see the file-format section of the
/// README. Throws ParseError with position info.
SuperringPtr parse_structure(std::string_view text);

/// Normalized rendering: sorted pairs, sorted set members. parse then
/// serialize is the identity on normalized files.
std::string serialize_structure(const FiniteSuperring& s);

/// The worked product-of-H-structures table shipped with the toolkit,
/// transcribed cell by cell; parses to the same structure as
/// product_h(make_hp(3), make_hp(5)) under the alias naming of builtin l9.
std::string_view l9_table_text();

} // namespace multikit

#endif

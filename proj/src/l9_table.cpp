#include "multikit/structures.hpp"

namespace multikit {

// Published operation tables of the nine-element product structure, entered
// cell by cell. The pair (1,2) is not printed in the source tables; it is
// completed from the product rule (and matches the printed (2,a) cell).
std::string_view l9_table_text() {
    static constexpr std::string_view text =
        R"(# l9: product of h3 and h5 under the alias naming 1,w,2w,2,a,b,c,d
name l9
elements 0 1 w 2w 2 a b c d
zero 0
one 1
neg identity
sum 0 0 : 0
sum 0 1 : 1
sum 0 w : w
sum 0 2w : 2w
sum 0 2 : 2
sum 0 a : a
sum 0 b : b
sum 0 c : c
sum 0 d : d
sum 1 1 : 0 1 w 2w 2 a b c d
sum 1 w : 1 w a b
sum 1 2w : 1 2w a c
sum 1 2 : 1 2 a d
sum 1 a : 1 w 2w 2 a b c d
sum 1 b : 1 w a b
sum 1 c : 1 2w a c
sum 1 d : 1 2 a d
sum w w : 0 1 w 2w 2 a b c d
sum w 2w : w 2w b c
sum w 2 : w 2 b d
sum w a : 1 w a b
sum w b : 1 w 2w 2 a b c d
sum w c : w 2w b c
sum w d : w 2 b d
sum 2w 2w : 0 1 w 2w 2 a b c d
sum 2w 2 : 2w 2 c d
sum 2w a : 1 2w a c
sum 2w b : w 2w b c
sum 2w c : 1 w 2w 2 a b c d
sum 2w d : 2w 2 c d
sum 2 2 : 0 1 w 2w 2 a b c d
sum 2 a : 1 2 a d
sum 2 b : w 2 b d
sum 2 c : 2w 2 c d
sum 2 d : 1 w 2w 2 a b c d
sum a a : 0 1 w 2w 2 a b c d
sum a b : 1 w a b
sum a c : 1 2w a c
sum a d : 1 2 a d
sum b b : 0 1 w 2w 2 a b c d
sum b c : w 2w b c
sum b d : w 2 b d
sum c c : 0 1 w 2w 2 a b c d
sum c d : 2w 2 c d
sum d d : 0 1 w 2w 2 a b c d
prod 0 0 : 0
prod 0 1 : 0
prod 0 w : 0
prod 0 2w : 0
prod 0 2 : 0
prod 0 a : 0
prod 0 b : 0
prod 0 c : 0
prod 0 d : 0
prod 1 1 : 1
prod 1 w : w
prod 1 2w : 2w
prod 1 2 : 2
prod 1 a : a
prod 1 b : b
prod 1 c : c
prod 1 d : d
prod w w : 2
prod w 2w : 1
prod w 2 : 2w
prod w a : b
prod w b : d
prod w c : a
prod w d : c
prod 2w 2w : 2
prod 2w 2 : w
prod 2w a : c
prod 2w b : a
prod 2w c : d
prod 2w d : b
prod 2 2 : 1
prod 2 a : d
prod 2 b : c
prod 2 c : b
prod 2 d : a
prod a a : 1
prod a b : w
prod a c : 2w
prod a d : 2
prod b b : 2
prod b c : 1
prod b d : 2w
prod c c : 2
prod c d : w
prod d d : 1
)";
    return text;
}

} // namespace multikit

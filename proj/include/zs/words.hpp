#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zs/moebius.hpp"

namespace zs {

// A reduced word in a free group on g generators. Letters are nonzero ints:
// +k stands for generator k-1, -k for its inverse (k = 1..g).
using Word = std::vector<int>;

// Matrix of the word under the given generator assignment.
MoebiusMap word_matrix(const Word& w, const std::vector<MoebiusMap>& gens);

// Printable form, generators named a, b, c, ... and inverses A, B, C, ...
std::string word_to_string(const Word& w);

Word inverse_word(const Word& w);

// Removes adjacent cancellations, then cancellations across the ends, so the
// result is cyclically reduced.
Word cyclically_reduce(const Word& w);

// Lexicographically least rotation of w (w must already be cyclically
// reduced). Letter order is by int value, so the exact order is immaterial as
// long as it is fixed; it only needs to be a total order for canonicalization.
Word least_rotation(const Word& w);

// Canonical representative of the unoriented conjugacy class of w: the
// smaller of least_rotation(w~) and least_rotation(inverse(w~)) where w~ is
// the cyclic reduction.
Word canonical_class(const Word& w);

// True if the cyclically reduced word is not a proper power of a shorter word.
bool is_primitive(const Word& cyc_reduced);

// Calls visit(word) for every cyclically reduced word of length exactly n
// (first letter unrestricted, no adjacent or wraparound cancellation) over g
// generators. Returns false if visit ever returns false (early stop).
bool for_each_cyclic_word(int g, int n, const std::function<bool(const Word&)>& visit);

} // namespace zs

#pragma once

#include <string>
#include <string_view>

#include "cuntzlab/element.hpp"

namespace cuntzlab {

/// Parses the element grammar
///
///   element  := term (('+'|'-') term)*
///   term     := coeff | [coeff '*'] factor+
///   factor   := 's[' digits ']' | 't[' digits ']'      (t[J] is s_J^*)
///   coeff    := rational | rational ('+'|'-') rational 'i' | rational 'i'
///   rational := ['-'] integer ['/' positive-integer]
///
/// Whitespace is insignificant, except that a complex coefficient is written
/// without spaces ("3+1/2i"; "3 + 1/2i" is two terms). Letters are single
/// digits 1..N, so N <= 9.
/// Factors multiply left to right under the Cuntz relations.
AlgebraElement parse_element(std::string_view text, int n_gens);

/// Canonical text form: canonicalized terms sorted by (I, J), coefficient 1
/// omitted, "0" for the zero element. Output re-parses to an equal element.
std::string format_element(const AlgebraElement& a);

/// Same term layout without canonicalization.
std::string format_raw(const AlgebraElement& a);

}  // namespace cuntzlab

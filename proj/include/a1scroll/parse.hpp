#pragma once

#include <string_view>

#include "a1scroll/forms.hpp"
#include "a1scroll/lens.hpp"
#include "a1scroll/scrolls.hpp"

namespace a1scroll {

// Text grammars. Whitespace between tokens is ignored. All throw ParseError
// carrying the offending offset; semantic violations (rank < 2, p not prime)
// are reported as ParseError too, positioned at the start of the value.

/// F(m;a1,...,ar)
ScrollSpec parse_scroll(std::string_view text);
/// [A,B,C,D]
BinaryCubicForm parse_form(std::string_view text);
/// [[p,q],[r,s]] with determinant +-1
UnimodularMatrix parse_matrix(std::string_view text);
/// L(p,q)
LensSpace parse_lens(std::string_view text);

}  // namespace a1scroll

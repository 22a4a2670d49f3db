#pragma once

#include <string_view>

#include "trank/errors.hpp"
#include "trank/presentation.hpp"

namespace trank {

/// Parses the presentation grammar
///
///   presentation := '<' gens '|' relators '>'
///   gens         := ident (',' ident)*
///   relators     := eps | word (',' word)*
///   word         := '1' | term+
///   term         := ident ('^' signed-integer)? | '[' word ',' word ']'
///   ident        := letter alphanumeric*
///
/// `[u,v]` expands to u v u^-1 v^-1 and `1` is the empty word. Whitespace is
/// insignificant everywhere; bytes >= 0x80 count as letters so UTF-8 names
/// work. Throws ParseError with the byte offset of the failure.
Presentation parse_presentation(std::string_view text);

}  // namespace trank

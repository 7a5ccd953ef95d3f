#pragma once

#include <string_view>

#include "core/ast.hpp"

namespace astdiff {

// Parses a small Java-like language into an Ast. Throws SyntaxError on
// malformed input. The supported surface covers classes with fields and
// methods, blocks, local variable declarations, expression/if/for/return
// statements, and common expressions (assignment, infix and prefix/postfix
// operators, method calls, field access, object creation, literals).
//
// Generic and plain type references become single leaf nodes whose value is
// the exact source text of the type (for example "Map<Integer,Integer>").
Ast parse_source(std::string_view source);

}  // namespace astdiff

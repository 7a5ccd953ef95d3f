#pragma once

#include <string>
#include <string_view>

#include "core/ast.hpp"

namespace astdiff {

inline constexpr int kAstFormatVersion = 1;

// Parses an AST interchange document. Throws SchemaError on malformed input.
Ast load_ast(std::string_view json_text);

// Serializes an Ast to the interchange format. load_ast(save_ast(a)) is
// structurally identical to a.
std::string save_ast(const Ast& ast);

}  // namespace astdiff

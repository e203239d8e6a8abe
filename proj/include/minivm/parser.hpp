#pragma once

#include <string_view>

#include "minivm/ast.hpp"

namespace minivm::frontend {

// Parse a whole program. Top-level statements become the body of an implicit
// zero-parameter main function; a top-level `return` yields the program
// result. Throws ast::ParseError with line/column on bad syntax.
ast::Module parse(std::string_view source);

}  // namespace minivm::frontend

#pragma once

#include "minivm/ast.hpp"

namespace minivm::frontend {

// Resolve every identifier to a parameter, local, capture or global, decide
// which variables must be cell-backed (captured by nested closures), and
// register all functions into Module::functions with stable func ids
// (main = 0, then pre-order).
//
// Top-level `var` declarations and top-level function declarations bind
// globals; inside functions they bind locals.
void resolveScopes(ast::Module& m);

}  // namespace minivm::frontend

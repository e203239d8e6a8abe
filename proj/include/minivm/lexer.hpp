#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minivm/ast.hpp"

namespace minivm::frontend {

enum class Tok : uint8_t {
  End, Int, Float, Str, Ident, Keyword, Punct,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;     // ident/keyword/punct spelling, string value
  int32_t intVal = 0;
  double floatVal = 0;
  ast::Pos pos;
};

// Tokenize the whole source. Throws ast::ParseError on bad input.
std::vector<Token> tokenize(std::string_view src);

}  // namespace minivm::frontend

#include "minivm/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <unordered_set>

namespace minivm::frontend {

using ast::ParseError;

namespace {

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {
      "var", "function", "if", "else", "while", "for", "return",
      "true", "false", "null", "undefined",
  };
  return kw;
}

// Longest-match punctuation, checked in order.
const char* const kPuncts[] = {
    "<<=", ">>=", "<<", ">>", "<=", ">=", "==", "!=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "++", "--",
    "+", "-", "*", "/", "%", "&", "|", "^", "<", ">", "=", "!",
    "(", ")", "{", "}", "[", "]", ",", ";", ":", ".",
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; k++) {
      if (i < src.size() && src[i] == '\n') {
        line++;
        col = 1;
      } else {
        col++;
      }
      i++;
    }
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      advance(2);
      while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/'))
        advance(1);
      if (i + 1 >= src.size()) throw ParseError("unterminated comment", line, col);
      advance(2);
      continue;
    }

    Token t;
    t.pos = {line, col};

    if (std::isdigit((unsigned char)c) ||
        (c == '.' && i + 1 < src.size() && std::isdigit((unsigned char)src[i + 1]))) {
      // hex literal
      if (c == '0' && i + 1 < src.size() && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
        size_t j = i + 2;
        uint64_t v = 0;
        if (j >= src.size() || !std::isxdigit((unsigned char)src[j]))
          throw ParseError("bad hex literal", line, col);
        while (j < src.size() && std::isxdigit((unsigned char)src[j])) {
          v = v * 16 + uint64_t(std::isdigit((unsigned char)src[j])
                                    ? src[j] - '0'
                                    : std::tolower((unsigned char)src[j]) - 'a' + 10);
          if (v > (1ull << 53)) throw ParseError("hex literal too large", line, col);
          j++;
        }
        if (v < (1ull << 31)) {
          t.kind = Tok::Int;
          t.intVal = int32_t(v);
        } else {
          t.kind = Tok::Float;
          t.floatVal = double(v);
        }
        advance(j - i);
        out.push_back(std::move(t));
        continue;
      }
      size_t j = i;
      bool isFloat = false;
      while (j < src.size() && std::isdigit((unsigned char)src[j])) j++;
      if (j < src.size() && src[j] == '.') {
        isFloat = true;
        j++;
        while (j < src.size() && std::isdigit((unsigned char)src[j])) j++;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) k++;
        if (k < src.size() && std::isdigit((unsigned char)src[k])) {
          isFloat = true;
          j = k;
          while (j < src.size() && std::isdigit((unsigned char)src[j])) j++;
        }
      }
      std::string text(src.substr(i, j - i));
      double d = 0;
      auto res = std::from_chars(text.data(), text.data() + text.size(), d);
      if (res.ec != std::errc()) throw ParseError("bad number literal", line, col);
      // Integer literals with no decimal point and magnitude < 2^31 are int32.
      if (!isFloat && d < 2147483648.0) {
        t.kind = Tok::Int;
        t.intVal = int32_t(d);
      } else {
        t.kind = Tok::Float;
        t.floatVal = d;
      }
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }

    if (std::isalpha((unsigned char)c) || c == '_' || c == '$') {
      size_t j = i;
      while (j < src.size() && (std::isalnum((unsigned char)src[j]) ||
                                src[j] == '_' || src[j] == '$'))
        j++;
      t.text = std::string(src.substr(i, j - i));
      t.kind = keywords().count(t.text) ? Tok::Keyword : Tok::Ident;
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }

    if (c == '"' || c == '\'') {
      char quote = c;
      size_t j = i + 1;
      std::string s;
      while (j < src.size() && src[j] != quote) {
        if (src[j] == '\n') throw ParseError("unterminated string", line, col);
        if (src[j] == '\\') {
          j++;
          if (j >= src.size()) throw ParseError("unterminated string", line, col);
          switch (src[j]) {
            case 'n': s += '\n'; break;
            case 't': s += '\t'; break;
            case 'r': s += '\r'; break;
            case '0': s += '\0'; break;
            case '\\': s += '\\'; break;
            case '"': s += '"'; break;
            case '\'': s += '\''; break;
            default:
              throw ParseError("unknown escape sequence", line, col);
          }
          j++;
        } else {
          s += src[j++];
        }
      }
      if (j >= src.size()) throw ParseError("unterminated string", line, col);
      t.kind = Tok::Str;
      t.text = std::move(s);
      advance(j + 1 - i);
      out.push_back(std::move(t));
      continue;
    }

    bool matched = false;
    for (const char* p : kPuncts) {
      size_t n = std::strlen(p);
      if (src.substr(i, n) == p) {
        t.kind = Tok::Punct;
        t.text = p;
        advance(n);
        out.push_back(std::move(t));
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  Token end;
  end.kind = Tok::End;
  end.pos = {line, col};
  out.push_back(std::move(end));
  return out;
}

}  // namespace minivm::frontend

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "minivm/value.hpp"

namespace minivm::ast {

struct Pos {
  int line = 0;
  int col = 0;
};

enum class BinOp : uint8_t {
  Add, Sub, Mul, Div, Mod,
  BitAnd, BitOr, BitXor, Shl, Shr,
  Lt, Le, Gt, Ge, Eq, Ne,
};

enum class UnOp : uint8_t { Neg, Not };

struct Expr;
struct Stmt;
struct FunctionDef;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

// How an identifier resolves after scope analysis.
enum class BindKind : uint8_t { Unresolved, Param, Local, Capture, Global };

struct Binding {
  BindKind kind = BindKind::Unresolved;
  uint32_t index = 0;  // param/local/capture slot; unused for globals
};

struct Expr {
  enum class Kind : uint8_t {
    IntLit, FloatLit, StrLit, ConstLit,
    Ident, Unary, Binary, Assign, IncDec,
    Index, Member, Call, Function, ArrayLit, ObjectLit,
  };
  Kind kind;
  Pos pos;

  // literals
  int32_t intVal = 0;
  double floatVal = 0;
  std::string strVal;            // StrLit text / Ident name / Member name
  rt::ConstKind constVal = rt::ConstKind::Undefined;

  BinOp binOp = BinOp::Add;      // Binary; compound Assign op
  UnOp unOp = UnOp::Neg;         // Unary
  bool hasBinOp = false;         // Assign: compound (x op= v)
  bool prefix = false;           // IncDec
  bool increment = true;         // IncDec

  ExprPtr a, b, c;               // operands: unary a; binary a,b; assign target a value b;
                                 // index base a idx b; member base a; call callee a
  std::vector<ExprPtr> args;     // Call args / ArrayLit elements
  std::vector<std::pair<std::string, ExprPtr>> fields;  // ObjectLit
  std::shared_ptr<FunctionDef> fn;  // Function expression

  Binding binding;               // Ident resolution (filled by scope pass)
};

struct VarDeclarator {
  std::string name;
  ExprPtr init;  // may be null
  Binding binding;
  Pos pos;
};

struct Stmt {
  enum class Kind : uint8_t {
    Expr, VarDecl, If, While, For, Return, Block, FuncDecl, Empty,
  };
  Kind kind;
  Pos pos;

  ExprPtr expr;                      // Expr stmt / Return value / If,While cond
  std::vector<VarDeclarator> decls;  // VarDecl
  StmtPtr body, alt;                 // If then/else; While,For body
  StmtPtr init;                      // For init (VarDecl or Expr stmt)
  ExprPtr cond, update;              // For
  std::vector<StmtPtr> stmts;        // Block
  std::shared_ptr<FunctionDef> fn;   // FuncDecl
  Binding binding;                   // FuncDecl name binding
  std::string name;                  // FuncDecl name
};

// A function body plus everything the scope pass learned about it.
struct FunctionDef {
  std::string name;  // empty for anonymous expressions
  std::vector<std::string> params;
  std::vector<StmtPtr> body;
  Pos pos;

  // Scope analysis results:
  uint32_t localCount = 0;                  // var-declared slots
  std::vector<bool> paramCaptured;          // param escapes into a closure
  std::vector<bool> localCaptured;          // local escapes into a closure
  std::vector<std::string> localNames;      // slot -> name (diagnostics)
  // One entry per captured outer variable; where the closure creator finds it.
  struct CaptureSource {
    BindKind kind = BindKind::Local;  // Param/Local/Capture (in the enclosing fn)
    uint32_t index = 0;
  };
  std::vector<CaptureSource> captures;
  std::vector<FunctionDef*> innerFuncs;     // for traversal
  uint32_t funcId = 0;                      // assigned when registered
};

struct Module {
  // The whole program body acts as a zero-parameter main function.
  std::shared_ptr<FunctionDef> main;
  // All functions (main first), indexed by funcId.
  std::vector<std::shared_ptr<FunctionDef>> functions;
};

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_), col(col_) {}
};

}  // namespace minivm::ast

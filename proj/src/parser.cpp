#include "minivm/parser.hpp"

#include "minivm/lexer.hpp"

namespace minivm::frontend {

using namespace ast;

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Module parseModule() {
    Module m;
    m.main = std::make_shared<FunctionDef>();
    m.main->name = "<main>";
    m.main->pos = {1, 1};
    while (!at(Tok::End)) m.main->body.push_back(parseStmt());
    return m;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek(size_t n = 0) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  const Token& cur() const { return toks_[pos_]; }
  Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  bool at(Tok k) const { return cur().kind == k; }
  bool atPunct(std::string_view p) const {
    return cur().kind == Tok::Punct && cur().text == p;
  }
  bool atKeyword(std::string_view k) const {
    return cur().kind == Tok::Keyword && cur().text == k;
  }
  bool eatPunct(std::string_view p) {
    if (!atPunct(p)) return false;
    pos_++;
    return true;
  }
  void expectPunct(std::string_view p) {
    if (!eatPunct(p))
      fail(std::string("expected '") + std::string(p) + "', got '" +
           describe(cur()) + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().pos.line, cur().pos.col);
  }
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "<end of input>";
      case Tok::Str: return "string";
      case Tok::Int:
      case Tok::Float: return "number";
      default: return t.text;
    }
  }

  ExprPtr makeExpr(Expr::Kind k, Pos p) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->pos = p;
    return e;
  }

  // ---- statements ----

  StmtPtr parseStmt() {
    Pos p = cur().pos;
    if (atPunct(";")) {
      take();
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Empty;
      s->pos = p;
      return s;
    }
    if (atPunct("{")) return parseBlock();
    if (atKeyword("var")) {
      auto s = parseVarDecl();
      expectPunct(";");
      return s;
    }
    if (atKeyword("function")) return parseFuncDecl();
    if (atKeyword("if")) return parseIf();
    if (atKeyword("while")) return parseWhile();
    if (atKeyword("for")) return parseFor();
    if (atKeyword("return")) {
      take();
      auto s = std::make_unique<Stmt>();
      s->kind = Stmt::Kind::Return;
      s->pos = p;
      if (!atPunct(";")) s->expr = parseExpr();
      expectPunct(";");
      return s;
    }
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::Expr;
    s->pos = p;
    s->expr = parseExpr();
    expectPunct(";");
    return s;
  }

  StmtPtr parseBlock() {
    Pos p = cur().pos;
    expectPunct("{");
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::Block;
    s->pos = p;
    while (!atPunct("}")) {
      if (at(Tok::End)) fail("unterminated block");
      s->stmts.push_back(parseStmt());
    }
    expectPunct("}");
    return s;
  }

  StmtPtr parseVarDecl() {
    Pos p = cur().pos;
    take();  // var
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::VarDecl;
    s->pos = p;
    for (;;) {
      if (!at(Tok::Ident)) fail("expected variable name");
      VarDeclarator d;
      d.pos = cur().pos;
      d.name = take().text;
      if (eatPunct("=")) d.init = parseAssign();
      s->decls.push_back(std::move(d));
      if (!eatPunct(",")) break;
    }
    return s;
  }

  std::shared_ptr<FunctionDef> parseFunctionRest(bool needName) {
    auto fn = std::make_shared<FunctionDef>();
    fn->pos = cur().pos;
    if (at(Tok::Ident)) fn->name = take().text;
    else if (needName) fail("expected function name");
    expectPunct("(");
    if (!atPunct(")")) {
      for (;;) {
        if (!at(Tok::Ident)) fail("expected parameter name");
        fn->params.push_back(take().text);
        if (!eatPunct(",")) break;
      }
    }
    expectPunct(")");
    expectPunct("{");
    while (!atPunct("}")) {
      if (at(Tok::End)) fail("unterminated function body");
      fn->body.push_back(parseStmt());
    }
    expectPunct("}");
    return fn;
  }

  StmtPtr parseFuncDecl() {
    Pos p = cur().pos;
    take();  // function
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::FuncDecl;
    s->pos = p;
    s->fn = parseFunctionRest(/*needName=*/true);
    s->name = s->fn->name;
    return s;
  }

  StmtPtr parseIf() {
    Pos p = cur().pos;
    take();
    expectPunct("(");
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::If;
    s->pos = p;
    s->expr = parseExpr();
    expectPunct(")");
    s->body = parseStmt();
    if (atKeyword("else")) {
      take();
      s->alt = parseStmt();
    }
    return s;
  }

  StmtPtr parseWhile() {
    Pos p = cur().pos;
    take();
    expectPunct("(");
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::While;
    s->pos = p;
    s->expr = parseExpr();
    expectPunct(")");
    s->body = parseStmt();
    return s;
  }

  StmtPtr parseFor() {
    Pos p = cur().pos;
    take();
    expectPunct("(");
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::For;
    s->pos = p;
    if (!atPunct(";")) {
      if (atKeyword("var")) {
        s->init = parseVarDecl();
      } else {
        s->init = std::make_unique<Stmt>();
        s->init->kind = Stmt::Kind::Expr;
        s->init->pos = cur().pos;
        s->init->expr = parseExpr();
      }
    }
    expectPunct(";");
    if (!atPunct(";")) s->cond = parseExpr();
    expectPunct(";");
    if (!atPunct(")")) s->update = parseExpr();
    expectPunct(")");
    s->body = parseStmt();
    return s;
  }

  // ---- expressions ----

  ExprPtr parseExpr() { return parseAssign(); }

  bool isAssignTarget(const Expr& e) const {
    return e.kind == Expr::Kind::Ident || e.kind == Expr::Kind::Index ||
           e.kind == Expr::Kind::Member;
  }

  ExprPtr parseAssign() {
    ExprPtr lhs = parseBinary(0);
    struct CompoundMap {
      const char* text;
      BinOp op;
    };
    static const CompoundMap compounds[] = {
        {"+=", BinOp::Add}, {"-=", BinOp::Sub}, {"*=", BinOp::Mul},
        {"/=", BinOp::Div}, {"%=", BinOp::Mod}, {"&=", BinOp::BitAnd},
        {"|=", BinOp::BitOr}, {"^=", BinOp::BitXor}, {"<<=", BinOp::Shl},
        {">>=", BinOp::Shr},
    };
    if (atPunct("=")) {
      Pos p = take().pos;
      if (!isAssignTarget(*lhs)) fail("invalid assignment target");
      auto e = makeExpr(Expr::Kind::Assign, p);
      e->a = std::move(lhs);
      e->b = parseAssign();  // right-associative
      return e;
    }
    for (const auto& cm : compounds) {
      if (atPunct(cm.text)) {
        Pos p = take().pos;
        if (!isAssignTarget(*lhs)) fail("invalid assignment target");
        auto e = makeExpr(Expr::Kind::Assign, p);
        e->hasBinOp = true;
        e->binOp = cm.op;
        e->a = std::move(lhs);
        e->b = parseAssign();
        return e;
      }
    }
    return lhs;
  }

  // Precedence climbing over binary operators.
  struct OpInfo {
    const char* text;
    BinOp op;
    int prec;
  };
  static const OpInfo* binOpInfo(const Token& t) {
    static const OpInfo ops[] = {
        {"|", BinOp::BitOr, 1},  {"^", BinOp::BitXor, 2},
        {"&", BinOp::BitAnd, 3}, {"==", BinOp::Eq, 4},
        {"!=", BinOp::Ne, 4},    {"<", BinOp::Lt, 5},
        {"<=", BinOp::Le, 5},    {">", BinOp::Gt, 5},
        {">=", BinOp::Ge, 5},    {"<<", BinOp::Shl, 6},
        {">>", BinOp::Shr, 6},   {"+", BinOp::Add, 7},
        {"-", BinOp::Sub, 7},    {"*", BinOp::Mul, 8},
        {"/", BinOp::Div, 8},    {"%", BinOp::Mod, 8},
    };
    if (t.kind != Tok::Punct) return nullptr;
    for (const auto& o : ops)
      if (t.text == o.text) return &o;
    return nullptr;
  }

  ExprPtr parseBinary(int minPrec) {
    ExprPtr lhs = parseUnary();
    for (;;) {
      const OpInfo* info = binOpInfo(cur());
      if (!info || info->prec < minPrec) return lhs;
      Pos p = take().pos;
      ExprPtr rhs = parseBinary(info->prec + 1);
      auto e = makeExpr(Expr::Kind::Binary, p);
      e->binOp = info->op;
      e->a = std::move(lhs);
      e->b = std::move(rhs);
      lhs = std::move(e);
    }
  }

  ExprPtr parseUnary() {
    Pos p = cur().pos;
    if (atPunct("-")) {
      take();
      // fold leading minus into numeric literals
      if (at(Tok::Int)) {
        Token t = take();
        auto e = makeExpr(Expr::Kind::IntLit, p);
        e->intVal = -t.intVal;
        return e;
      }
      if (at(Tok::Float)) {
        Token t = take();
        auto e = makeExpr(Expr::Kind::FloatLit, p);
        e->floatVal = -t.floatVal;
        return e;
      }
      auto e = makeExpr(Expr::Kind::Unary, p);
      e->unOp = UnOp::Neg;
      e->a = parseUnary();
      return e;
    }
    if (atPunct("!")) {
      take();
      auto e = makeExpr(Expr::Kind::Unary, p);
      e->unOp = UnOp::Not;
      e->a = parseUnary();
      return e;
    }
    if (atPunct("++") || atPunct("--")) {
      bool inc = take().text == "++";
      auto e = makeExpr(Expr::Kind::IncDec, p);
      e->prefix = true;
      e->increment = inc;
      e->a = parseUnary();
      if (!isAssignTarget(*e->a)) fail("invalid increment target");
      return e;
    }
    return parsePostfix();
  }

  ExprPtr parsePostfix() {
    ExprPtr e = parsePrimary();
    for (;;) {
      Pos p = cur().pos;
      if (atPunct("(")) {
        take();
        auto call = makeExpr(Expr::Kind::Call, p);
        call->a = std::move(e);
        if (!atPunct(")")) {
          for (;;) {
            call->args.push_back(parseAssign());
            if (!eatPunct(",")) break;
          }
        }
        expectPunct(")");
        e = std::move(call);
        continue;
      }
      if (atPunct("[")) {
        take();
        auto idx = makeExpr(Expr::Kind::Index, p);
        idx->a = std::move(e);
        idx->b = parseExpr();
        expectPunct("]");
        e = std::move(idx);
        continue;
      }
      if (atPunct(".")) {
        take();
        if (!at(Tok::Ident) && !at(Tok::Keyword)) fail("expected property name");
        auto mem = makeExpr(Expr::Kind::Member, p);
        mem->a = std::move(e);
        mem->strVal = take().text;
        e = std::move(mem);
        continue;
      }
      if (atPunct("++") || atPunct("--")) {
        bool inc = take().text == "++";
        if (!isAssignTarget(*e)) fail("invalid increment target");
        auto id = makeExpr(Expr::Kind::IncDec, p);
        id->prefix = false;
        id->increment = inc;
        id->a = std::move(e);
        e = std::move(id);
        continue;
      }
      return e;
    }
  }

  ExprPtr parsePrimary() {
    Pos p = cur().pos;
    switch (cur().kind) {
      case Tok::Int: {
        auto e = makeExpr(Expr::Kind::IntLit, p);
        e->intVal = take().intVal;
        return e;
      }
      case Tok::Float: {
        auto e = makeExpr(Expr::Kind::FloatLit, p);
        e->floatVal = take().floatVal;
        return e;
      }
      case Tok::Str: {
        auto e = makeExpr(Expr::Kind::StrLit, p);
        e->strVal = take().text;
        return e;
      }
      case Tok::Ident: {
        auto e = makeExpr(Expr::Kind::Ident, p);
        e->strVal = take().text;
        return e;
      }
      case Tok::Keyword: {
        const std::string& kw = cur().text;
        if (kw == "true" || kw == "false" || kw == "null" || kw == "undefined") {
          auto e = makeExpr(Expr::Kind::ConstLit, p);
          e->constVal = kw == "true"    ? rt::ConstKind::True
                        : kw == "false" ? rt::ConstKind::False
                        : kw == "null"  ? rt::ConstKind::Null
                                        : rt::ConstKind::Undefined;
          take();
          return e;
        }
        if (kw == "function") {
          take();
          auto e = makeExpr(Expr::Kind::Function, p);
          e->fn = parseFunctionRest(/*needName=*/false);
          return e;
        }
        fail("unexpected keyword '" + kw + "'");
      }
      case Tok::Punct: {
        if (eatPunct("(")) {
          ExprPtr e = parseExpr();
          expectPunct(")");
          return e;
        }
        if (atPunct("[")) {
          take();
          auto e = makeExpr(Expr::Kind::ArrayLit, p);
          if (!atPunct("]")) {
            for (;;) {
              e->args.push_back(parseAssign());
              if (!eatPunct(",")) break;
            }
          }
          expectPunct("]");
          return e;
        }
        if (atPunct("{")) {
          take();
          auto e = makeExpr(Expr::Kind::ObjectLit, p);
          if (!atPunct("}")) {
            for (;;) {
              if (!at(Tok::Ident) && !at(Tok::Str) && !at(Tok::Keyword))
                fail("expected property name");
              std::string key = take().text;
              expectPunct(":");
              e->fields.emplace_back(std::move(key), parseAssign());
              if (!eatPunct(",")) break;
            }
          }
          expectPunct("}");
          return e;
        }
        fail("unexpected token '" + describe(cur()) + "'");
      }
      case Tok::End:
        fail("unexpected end of input");
    }
    fail("unexpected token");
  }
};

}  // namespace

ast::Module parse(std::string_view source) {
  Parser p(tokenize(source));
  return p.parseModule();
}

}  // namespace minivm::frontend

#include "minivm/scope.hpp"

#include <map>
#include <unordered_map>

namespace minivm::frontend {

using namespace ast;

namespace {

class ScopeResolver {
 public:
  explicit ScopeResolver(Module& m) : module_(m) {}

  void run() {
    module_.functions.clear();
    registerFunction(module_.main);
    FnScope top;
    top.fn = module_.main.get();
    top.isGlobalScope = true;
    stack_.push_back(std::move(top));
    collectDecls(*module_.main);
    for (auto& s : module_.main->body) resolveStmt(*s);
    stack_.pop_back();
  }

 private:
  struct FnScope {
    FunctionDef* fn = nullptr;
    bool isGlobalScope = false;
    std::unordered_map<std::string, Binding> names;
    // (kind,index in enclosing fn) -> capture slot, to dedupe
    std::map<std::pair<int, uint32_t>, uint32_t> captureMemo;
  };

  Module& module_;
  std::vector<FnScope> stack_;

  void registerFunction(const std::shared_ptr<FunctionDef>& fn) {
    fn->funcId = static_cast<uint32_t>(module_.functions.size());
    module_.functions.push_back(fn);
  }

  // Hoist: declare params, then all `var` names and nested function-decl
  // names anywhere in the body (function-scoped, not block-scoped).
  void collectDecls(FunctionDef& fn) {
    FnScope& sc = stack_.back();
    if (!sc.isGlobalScope) {
      for (uint32_t i = 0; i < fn.params.size(); i++)
        sc.names[fn.params[i]] = Binding{BindKind::Param, i};
      fn.paramCaptured.assign(fn.params.size(), false);
    }
    collectDeclsInStmts(fn.body);
    fn.localCaptured.assign(fn.localCount, false);
  }

  void declareLocal(const std::string& name) {
    FnScope& sc = stack_.back();
    if (sc.isGlobalScope) return;  // top-level vars are globals
    if (sc.names.count(name)) return;  // redeclaration aliases
    FunctionDef& fn = *sc.fn;
    sc.names[name] = Binding{BindKind::Local, fn.localCount};
    fn.localNames.push_back(name);
    fn.localCount++;
  }

  void collectDeclsInStmts(const std::vector<StmtPtr>& stmts) {
    for (const auto& s : stmts) collectDeclsInStmt(*s);
  }

  void collectDeclsInStmt(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::VarDecl:
        for (const auto& d : s.decls) declareLocal(d.name);
        break;
      case Stmt::Kind::FuncDecl:
        declareLocal(s.name);
        break;
      case Stmt::Kind::If:
        collectDeclsInStmt(*s.body);
        if (s.alt) collectDeclsInStmt(*s.alt);
        break;
      case Stmt::Kind::While:
        collectDeclsInStmt(*s.body);
        break;
      case Stmt::Kind::For:
        if (s.init) collectDeclsInStmt(*s.init);
        collectDeclsInStmt(*s.body);
        break;
      case Stmt::Kind::Block:
        collectDeclsInStmts(s.stmts);
        break;
      default:
        break;
    }
  }

  // Resolve a name against the scope stack. Walks outward; outer hits become
  // captures threaded through every function in between, and the owning
  // variable is marked cell-backed.
  Binding resolve(const std::string& name) {
    for (size_t i = stack_.size(); i-- > 0;) {
      auto it = stack_[i].names.find(name);
      if (it == stack_[i].names.end()) continue;
      Binding found = it->second;
      if (i == stack_.size() - 1) return found;
      // Mark the owner's variable as captured.
      FunctionDef* owner = stack_[i].fn;
      if (found.kind == BindKind::Param)
        owner->paramCaptured[found.index] = true;
      else if (found.kind == BindKind::Local)
        owner->localCaptured[found.index] = true;
      // Thread a capture through each nested function.
      Binding src = found;
      for (size_t j = i + 1; j < stack_.size(); j++) {
        FnScope& sc = stack_[j];
        auto key = std::make_pair(int(src.kind), src.index);
        auto memo = sc.captureMemo.find(key);
        uint32_t slot;
        if (memo != sc.captureMemo.end()) {
          slot = memo->second;
        } else {
          slot = static_cast<uint32_t>(sc.fn->captures.size());
          sc.fn->captures.push_back(
              FunctionDef::CaptureSource{src.kind, src.index});
          sc.captureMemo[key] = slot;
        }
        src = Binding{BindKind::Capture, slot};
      }
      return src;
    }
    return Binding{BindKind::Global, 0};
  }

  void resolveFunction(const std::shared_ptr<FunctionDef>& fn) {
    registerFunction(fn);
    stack_.back().fn->innerFuncs.push_back(fn.get());
    FnScope sc;
    sc.fn = fn.get();
    stack_.push_back(std::move(sc));
    collectDecls(*fn);
    for (auto& s : fn->body) resolveStmt(*s);
    stack_.pop_back();
  }

  void resolveStmt(Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Expr:
        resolveExpr(*s.expr);
        break;
      case Stmt::Kind::VarDecl:
        for (auto& d : s.decls) {
          if (d.init) resolveExpr(*d.init);
          d.binding = resolve(d.name);
        }
        break;
      case Stmt::Kind::If:
        resolveExpr(*s.expr);
        resolveStmt(*s.body);
        if (s.alt) resolveStmt(*s.alt);
        break;
      case Stmt::Kind::While:
        resolveExpr(*s.expr);
        resolveStmt(*s.body);
        break;
      case Stmt::Kind::For:
        if (s.init) resolveStmt(*s.init);
        if (s.cond) resolveExpr(*s.cond);
        if (s.update) resolveExpr(*s.update);
        resolveStmt(*s.body);
        break;
      case Stmt::Kind::Return:
        if (s.expr) resolveExpr(*s.expr);
        break;
      case Stmt::Kind::Block:
        for (auto& st : s.stmts) resolveStmt(*st);
        break;
      case Stmt::Kind::FuncDecl:
        resolveFunction(s.fn);
        s.binding = resolve(s.name);
        break;
      case Stmt::Kind::Empty:
        break;
    }
  }

  void resolveExpr(Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Ident:
        e.binding = resolve(e.strVal);
        break;
      case Expr::Kind::Unary:
        resolveExpr(*e.a);
        break;
      case Expr::Kind::Binary:
        resolveExpr(*e.a);
        resolveExpr(*e.b);
        break;
      case Expr::Kind::Assign:
        resolveExpr(*e.b);
        resolveExpr(*e.a);
        break;
      case Expr::Kind::IncDec:
        resolveExpr(*e.a);
        break;
      case Expr::Kind::Index:
        resolveExpr(*e.a);
        resolveExpr(*e.b);
        break;
      case Expr::Kind::Member:
        resolveExpr(*e.a);
        break;
      case Expr::Kind::Call:
        resolveExpr(*e.a);
        for (auto& a : e.args) resolveExpr(*a);
        break;
      case Expr::Kind::Function:
        resolveFunction(e.fn);
        break;
      case Expr::Kind::ArrayLit:
        for (auto& a : e.args) resolveExpr(*a);
        break;
      case Expr::Kind::ObjectLit:
        for (auto& [k, v] : e.fields) resolveExpr(*v);
        break;
      default:
        break;  // literals
    }
  }
};

}  // namespace

void resolveScopes(ast::Module& m) { ScopeResolver(m).run(); }

}  // namespace minivm::frontend

//===- numbering.cc - Pre-order statement IDs and canonical rendering -----===//
#include <string>
#include <vector>

#include "flowgraph/frontend.h"

namespace flowgraph {
namespace {

class Numberer {
 public:
  std::vector<StatementInfo> run(Block& body) {
    visit(body);
    return std::move(infos_);
  }

 private:
  void visit(Block& block) {
    for (Stmt& s : block.stmts) visit(s);
  }

  StatementId assign(Stmt& s, StatementKind kind, std::string text, std::string cond = {}) {
    auto id = static_cast<StatementId>(infos_.size());
    s.id = id;
    infos_.push_back({kind, std::move(text), std::move(cond), s.loc});
    return id;
  }

  void visit(Stmt& s) {
    std::visit(Overloaded{
                   [&](VarDecl& d) {
                     assign(s, StatementKind::kVarDecl,
                            "int " + d.name + " = " + render_expr(d.init) + ";");
                   },
                   [&](Assign& a) {
                     assign(s, StatementKind::kAssign,
                            a.name + " = " + render_expr(a.value) + ";");
                   },
                   [&](Print& p) {
                     assign(s, StatementKind::kPrint,
                            "System.out.println(" + render_expr(p.value) + ");");
                   },
                   [&](If& i) {
                     std::string cond = render_expr(i.cond);
                     assign(s, StatementKind::kIf, "if (" + cond + ")", cond);
                     visit(*i.then_branch);
                     if (i.else_branch) visit(**i.else_branch);
                   },
                   [&](While& w) {
                     std::string cond = render_expr(w.cond);
                     assign(s, StatementKind::kWhile, "while (" + cond + ")", cond);
                     visit(*w.body);
                   },
                   [&](Block& b) { visit(b); },
               },
               s.node);
  }

  std::vector<StatementInfo> infos_;
};

class Renderer {
 public:
  explicit Renderer(const NumberedProgram& p) : program_(p) {}

  std::string run() {
    line(0, "public class " + program_.ast.class_name + " {");
    line(1, "public static void main(String[] " + program_.ast.args_name + ") {");
    for (const Stmt& s : program_.ast.main_body.stmts) stmt(s, 2);
    line(1, "}");
    line(0, "}");
    std::string out;
    for (const auto& l : lines_) out += l + "\n";
    return out;
  }

 private:
  void line(int indent, std::string text) {
    lines_.push_back(std::string(2 * indent, ' ') + std::move(text));
  }

  void stmt(const Stmt& s, int indent) {
    if (const auto* b = std::get_if<Block>(&s.node)) {
      line(indent, "{");
      for (const Stmt& child : b->stmts) stmt(child, indent + 1);
      line(indent, "}");
      return;
    }
    line(indent, program_.text_of(*s.id));
    if (const auto* i = std::get_if<If>(&s.node)) {
      bool braced = arm(*i->then_branch, indent);
      if (i->else_branch) {
        if (braced) {
          lines_.back() += " else";
        } else {
          line(indent, "else");
        }
        arm(**i->else_branch, indent);
      }
    } else if (const auto* w = std::get_if<While>(&s.node)) {
      arm(*w->body, indent);
    }
  }

  // Returns true when the arm was a block closed by a "}" line.
  bool arm(const Stmt& s, int indent) {
    if (const auto* b = std::get_if<Block>(&s.node)) {
      lines_.back() += " {";
      for (const Stmt& child : b->stmts) stmt(child, indent + 1);
      line(indent, "}");
      return true;
    }
    stmt(s, indent + 1);
    return false;
  }

  const NumberedProgram& program_;
  std::vector<std::string> lines_;
};

class Dumper {
 public:
  std::string run(const Ast& ast) {
    line(0, "Class " + ast.class_name);
    line(1, "Main(String[] " + ast.args_name + ")");
    block(ast.main_body, 2);
    return out_;
  }

 private:
  void line(int indent, const std::string& text) {
    out_ += std::string(2 * indent, ' ') + text + "\n";
  }

  static std::string tag(const Stmt& s) { return "[" + std::to_string(*s.id) + "] "; }

  void block(const Block& b, int indent) {
    line(indent, "Block");
    for (const Stmt& s : b.stmts) stmt(s, indent + 1);
  }

  void stmt(const Stmt& s, int indent) {
    std::visit(Overloaded{
                   [&](const VarDecl& d) {
                     line(indent, tag(s) + "VarDecl " + d.name);
                     expr(d.init, indent + 1);
                   },
                   [&](const Assign& a) {
                     line(indent, tag(s) + "Assign " + a.name);
                     expr(a.value, indent + 1);
                   },
                   [&](const Print& p) {
                     line(indent, tag(s) + "Print");
                     expr(p.value, indent + 1);
                   },
                   [&](const If& i) {
                     line(indent, tag(s) + "If");
                     expr(i.cond, indent + 1);
                     line(indent + 1, "Then");
                     stmt(*i.then_branch, indent + 2);
                     if (i.else_branch) {
                       line(indent + 1, "Else");
                       stmt(**i.else_branch, indent + 2);
                     }
                   },
                   [&](const While& w) {
                     line(indent, tag(s) + "While");
                     expr(w.cond, indent + 1);
                     line(indent + 1, "Body");
                     stmt(*w.body, indent + 2);
                   },
                   [&](const Block& b) { block(b, indent); },
               },
               s.node);
  }

  void expr(const Expr& e, int indent) {
    std::visit(Overloaded{
                   [&](const IntLiteral& lit) {
                     line(indent, "IntLiteral " + std::to_string(lit.value));
                   },
                   [&](const VarRef& v) { line(indent, "Var " + v.name); },
                   [&](const Unary& u) {
                     line(indent, "Unary " + std::string(spelling(u.op)));
                     expr(*u.operand, indent + 1);
                   },
                   [&](const Binary& b) {
                     line(indent, "Binary " + std::string(spelling(b.op)));
                     expr(*b.lhs, indent + 1);
                     expr(*b.rhs, indent + 1);
                   },
               },
               e.node);
  }

  std::string out_;
};

}  // namespace

NumberedProgram number_statements(Ast ast) {
  NumberedProgram program{std::move(ast), {}};
  program.statements = Numberer().run(program.ast.main_body);
  return program;
}

NumberedProgram load_program(std::string_view source) {
  return number_statements(parse(tokenize(source)));
}

std::string render_program(const NumberedProgram& program) { return Renderer(program).run(); }

std::string dump_ast(const NumberedProgram& program) { return Dumper().run(program.ast); }

}  // namespace flowgraph

#include "program_gen.h"

#include <vector>

namespace flowgraph::testing {
namespace {

class Generator {
 public:
  Generator(const GenOptions& opts, std::mt19937& rng) : opts_(opts), rng_(rng) {}

  std::string run() {
    budget_ = std::uniform_int_distribution<int>(1, opts_.max_statements)(rng_);
    scopes_.emplace_back();
    std::string body;
    // Start with a declaration so later statements have something to read.
    body += indent(2) + decl() + "\n";
    while (budget_ > 0) body += stmt(2, 0, 0);
    return "public class Generated {\n  public static void main(String[] args) {\n" + body +
           "  }\n}\n";
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  static std::string indent(int n) { return std::string(2 * n, ' '); }

  std::string any_visible() {
    std::vector<std::string> all;
    for (const auto& s : scopes_) all.insert(all.end(), s.begin(), s.end());
    if (all.empty()) return {};
    return all[pick(0, static_cast<int>(all.size()) - 1)];
  }

  std::string atom() {
    std::string v = any_visible();
    if (!v.empty() && chance(0.6)) return v;
    return std::to_string(pick(0, 9));
  }

  std::string int_expr(int depth) {
    if (depth <= 0 || chance(0.35)) return atom();
    int op = pick(0, opts_.allow_division ? 5 : 3);
    switch (op) {
      case 0: return int_expr(depth - 1) + " + " + int_expr(depth - 1);
      case 1: return int_expr(depth - 1) + " - " + int_expr(depth - 1);
      case 2: return "(" + int_expr(depth - 1) + ") * " + atom();
      case 3: return "-" + atom();
      case 4: return "(" + int_expr(depth - 1) + ") / " + std::to_string(pick(1, 4));
      default: return "(" + int_expr(depth - 1) + ") % " + std::to_string(pick(1, 4));
    }
  }

  std::string relation() {
    static const char* kOps[] = {"<", ">", "<=", ">=", "==", "!="};
    return int_expr(1) + " " + kOps[pick(0, 5)] + " " + int_expr(1);
  }

  std::string condition() {
    int shape = pick(0, 9);
    if (shape == 0) return relation() + " && " + relation();
    if (shape == 1) return relation() + " || " + relation();
    if (shape == 2) return "!(" + relation() + ")";
    return relation();
  }

  std::string decl() {
    --budget_;
    std::string name = "v" + std::to_string(next_var_++);
    std::string text = "int " + name + " = " + int_expr(2) + ";";
    scopes_.back().push_back(name);
    return text;
  }

  std::string simple(int ind) {
    --budget_;
    std::string target = any_visible();
    if (opts_.allow_print && chance(0.1)) {
      return indent(ind) + "System.out.println(" + int_expr(2) + ");\n";
    }
    if (target.empty() || chance(0.2)) {
      ++budget_;
      return indent(ind) + decl() + "\n";
    }
    return indent(ind) + target + " = " + int_expr(2) + ";\n";
  }

  // An arm is either a single statement or a braced block; never empty.
  std::string arm(int ind, int if_depth, int loop_depth) {
    if (budget_ <= 1 || chance(0.5)) {
      scopes_.emplace_back();
      std::string s = budget_ > 0 ? stmt(ind + 1, if_depth, loop_depth) : forced_simple(ind + 1);
      scopes_.pop_back();
      return s;
    }
    scopes_.emplace_back();
    std::string out = indent(ind) + "{\n";
    int count = pick(1, 3);
    out += stmt(ind + 1, if_depth, loop_depth);
    for (int i = 1; i < count && budget_ > 0; ++i) out += stmt(ind + 1, if_depth, loop_depth);
    out += indent(ind) + "}\n";
    scopes_.pop_back();
    return out;
  }

  // Arms are non-empty even when the budget ran out mid-construct.
  std::string forced_simple(int ind) {
    ++budget_;
    return simple(ind);
  }

  std::string stmt(int ind, int if_depth, int loop_depth) {
    if (budget_ <= 0) return forced_simple(ind);
    int kind = pick(0, 9);
    bool can_if = if_depth < opts_.max_if_depth && budget_ >= 2;
    bool can_loop = opts_.allow_loops && loop_depth < opts_.max_loop_depth && budget_ >= 2;
    if (kind <= 2 && can_if) {
      --budget_;
      std::string out = indent(ind) + "if (" + condition() + ")\n";
      out += arm(ind, if_depth + 1, loop_depth);
      if (budget_ > 0 && chance(0.6)) {
        out += indent(ind) + "else\n";
        out += arm(ind, if_depth + 1, loop_depth);
      }
      return out;
    }
    if (kind == 3 && can_loop) {
      --budget_;
      std::string out = indent(ind) + "while (" + condition() + ")\n";
      out += arm(ind, if_depth, loop_depth + 1);
      return out;
    }
    return simple(ind);
  }

  const GenOptions& opts_;
  std::mt19937& rng_;
  int budget_ = 0;
  int next_var_ = 0;
  std::vector<std::vector<std::string>> scopes_;
};

}  // namespace

std::string generate_program(const GenOptions& opts, std::mt19937& rng) {
  return Generator(opts, rng).run();
}

}  // namespace flowgraph::testing

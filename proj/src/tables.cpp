#include "rtk/tables.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>

#include "rtk/errors.hpp"

#ifndef RTK_DATA_DIR
#define RTK_DATA_DIR "."
#endif

namespace rtk::tables {

namespace {

[[noreturn]] void fail_parse(int line, const std::string& msg) {
  throw parse_error("tables: line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

}  // namespace

std::string to_string(TableId id) {
  switch (id) {
    case TableId::T1: return "T1";
    case TableId::T2: return "T2";
    case TableId::T3: return "T3";
    case TableId::T4: return "T4";
    case TableId::T5: return "T5";
    case TableId::T6: return "T6";
    case TableId::T7: return "T7";
    case TableId::T8: return "T8";
    case TableId::TM2: return "TM2";
    case TableId::TEXC: return "TEXC";
    case TableId::TPAIRS: return "TPAIRS";
  }
  return "?";
}

std::optional<TableId> parse_table_id(const std::string& s) {
  static const std::map<std::string, TableId> m = {
      {"T1", TableId::T1},   {"T2", TableId::T2},     {"T3", TableId::T3},
      {"T4", TableId::T4},   {"T5", TableId::T5},     {"T6", TableId::T6},
      {"T7", TableId::T7},   {"T8", TableId::T8},     {"TM2", TableId::TM2},
      {"TEXC", TableId::TEXC}, {"TPAIRS", TableId::TPAIRS}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- expressions

struct Expr {
  enum class K { Num, Var, Add, Sub, Mul, Div, Mod, Pow, Binom, Gcd } k;
  std::int64_t num = 0;
  char var = 0;
  ExprPtr a, b;
};

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  ExprPtr parse() {
    ExprPtr e = sum();
    skip_ws();
    if (pos != s.size()) throw parse_error("trailing input in expression '" + s + "'");
    return e;
  }

  ExprPtr sum() {
    ExprPtr e = product();
    for (;;) {
      if (eat('+')) {
        auto r = std::make_shared<Expr>();
        r->k = Expr::K::Add;
        r->a = e;
        r->b = product();
        e = r;
      } else if (eat('-')) {
        auto r = std::make_shared<Expr>();
        r->k = Expr::K::Sub;
        r->a = e;
        r->b = product();
        e = r;
      } else {
        return e;
      }
    }
  }

  ExprPtr product() {
    ExprPtr e = power();
    for (;;) {
      Expr::K k;
      if (eat('*')) k = Expr::K::Mul;
      else if (eat('/')) k = Expr::K::Div;
      else if (eat('%')) k = Expr::K::Mod;
      else return e;
      auto r = std::make_shared<Expr>();
      r->k = k;
      r->a = e;
      r->b = power();
      e = r;
    }
  }

  ExprPtr power() {
    ExprPtr e = atom();
    if (eat('^')) {
      auto r = std::make_shared<Expr>();
      r->k = Expr::K::Pow;
      r->a = e;
      r->b = atom();
      return r;
    }
    return e;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos >= s.size()) throw parse_error("unexpected end of expression '" + s + "'");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      ExprPtr e = sum();
      if (!eat(')')) throw parse_error("missing ')' in '" + s + "'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        v = v * 10 + (s[pos++] - '0');
      auto r = std::make_shared<Expr>();
      r->k = Expr::K::Num;
      r->num = v;
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
        name.push_back(s[pos++]);
      if (name == "binom" || name == "gcd") {
        if (!eat('(')) throw parse_error("missing '(' after " + name);
        ExprPtr x = sum();
        if (!eat(',')) throw parse_error("missing ',' in " + name);
        ExprPtr y = sum();
        if (!eat(')')) throw parse_error("missing ')' in " + name);
        auto r = std::make_shared<Expr>();
        r->k = name == "binom" ? Expr::K::Binom : Expr::K::Gcd;
        r->a = x;
        r->b = y;
        return r;
      }
      if (name.size() == 1 && std::string("npabci").find(name[0]) != std::string::npos) {
        auto r = std::make_shared<Expr>();
        r->k = Expr::K::Var;
        r->var = name[0];
        return r;
      }
      throw parse_error("unknown symbol '" + name + "' in expression '" + s + "'");
    }
    throw parse_error("bad character '" + std::string(1, c) + "' in expression '" + s + "'");
  }
};

int level(const Expr& e) {
  switch (e.k) {
    case Expr::K::Add:
    case Expr::K::Sub: return 1;
    case Expr::K::Mul:
    case Expr::K::Div:
    case Expr::K::Mod: return 2;
    case Expr::K::Pow: return 3;
    default: return 4;
  }
}

std::string render_at(const ExprPtr& e, int min_level) {
  std::string body;
  switch (e->k) {
    case Expr::K::Num: body = std::to_string(e->num); break;
    case Expr::K::Var: body = std::string(1, e->var); break;
    case Expr::K::Add: body = render_at(e->a, 1) + "+" + render_at(e->b, 2); break;
    case Expr::K::Sub: body = render_at(e->a, 1) + "-" + render_at(e->b, 2); break;
    case Expr::K::Mul: body = render_at(e->a, 2) + "*" + render_at(e->b, 3); break;
    case Expr::K::Div: body = render_at(e->a, 2) + "/" + render_at(e->b, 3); break;
    case Expr::K::Mod: body = render_at(e->a, 2) + "%" + render_at(e->b, 3); break;
    case Expr::K::Pow: body = render_at(e->a, 4) + "^" + render_at(e->b, 4); break;
    case Expr::K::Binom:
      body = "binom(" + render_at(e->a, 1) + "," + render_at(e->b, 1) + ")";
      break;
    case Expr::K::Gcd:
      body = "gcd(" + render_at(e->a, 1) + "," + render_at(e->b, 1) + ")";
      break;
  }
  return level(*e) < min_level ? "(" + body + ")" : body;
}

}  // namespace

ExprPtr parse_expr(const std::string& s) { return ExprParser(s).parse(); }

std::string render(const ExprPtr& e) { return render_at(e, 0); }

bool mentions(const ExprPtr& e, char var) {
  if (!e) return false;
  if (e->k == Expr::K::Var) return e->var == var;
  return mentions(e->a, var) || mentions(e->b, var);
}

Int eval_big(const ExprPtr& e, const Env& env) {
  switch (e->k) {
    case Expr::K::Num: return e->num;
    case Expr::K::Var: {
      auto it = env.find(e->var);
      if (it == env.end()) throw parse_error(std::string("unbound variable ") + e->var);
      return it->second;
    }
    case Expr::K::Add: return eval_big(e->a, env) + eval_big(e->b, env);
    case Expr::K::Sub: return eval_big(e->a, env) - eval_big(e->b, env);
    case Expr::K::Mul: return eval_big(e->a, env) * eval_big(e->b, env);
    case Expr::K::Div: {
      Int x = eval_big(e->a, env), y = eval_big(e->b, env);
      if (y == 0 || x % y != 0)
        throw parse_error("inexact division in '" + render(e) + "'");
      return x / y;
    }
    case Expr::K::Mod: {
      Int x = eval_big(e->a, env), y = eval_big(e->b, env);
      Int r = x % y;
      if (r < 0) r += abs(y);
      return r;
    }
    case Expr::K::Pow: {
      Int base = eval_big(e->a, env);
      std::int64_t ex = static_cast<std::int64_t>(eval_big(e->b, env));
      return int_pow(base, ex);
    }
    case Expr::K::Binom: {
      return binomial(static_cast<std::int64_t>(eval_big(e->a, env)),
                      static_cast<std::int64_t>(eval_big(e->b, env)));
    }
    case Expr::K::Gcd: {
      Int x = abs(eval_big(e->a, env)), y = abs(eval_big(e->b, env));
      while (y != 0) {
        Int t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
  }
  throw parse_error("bad expression node");
}

std::int64_t eval(const ExprPtr& e, const Env& env) {
  return static_cast<std::int64_t>(eval_big(e, env));
}

// --------------------------------------------------------------- conditions

namespace {

// Extended evaluation used when p = 0: the variable p acts as +infinity.
// Throws out_of_table_domain when the result is not determined (the enclosing
// row is then char-p only).
struct Ext {
  int inf = 0;  // -1, 0, +1
  std::int64_t val = 0;
};

Ext eval_ext(const ExprPtr& e, const Env& env) {
  auto fin = [](std::int64_t v) { return Ext{0, v}; };
  switch (e->k) {
    case Expr::K::Num: return fin(e->num);
    case Expr::K::Var:
      if (e->var == 'p' && env.at('p') == 0) return Ext{+1, 0};
      return fin(env.at(e->var));
    case Expr::K::Add: {
      Ext x = eval_ext(e->a, env), y = eval_ext(e->b, env);
      if (x.inf && y.inf && x.inf != y.inf) throw out_of_table_domain("inf-inf");
      if (x.inf) return x;
      if (y.inf) return y;
      return fin(x.val + y.val);
    }
    case Expr::K::Sub: {
      Ext x = eval_ext(e->a, env), y = eval_ext(e->b, env);
      if (x.inf && y.inf) throw out_of_table_domain("inf-inf");
      if (x.inf) return x;
      if (y.inf) return Ext{-y.inf, 0};
      return fin(x.val - y.val);
    }
    case Expr::K::Mul: {
      Ext x = eval_ext(e->a, env), y = eval_ext(e->b, env);
      if (!x.inf && !y.inf) return fin(x.val * y.val);
      int sx = x.inf ? x.inf : (x.val > 0 ? 1 : x.val < 0 ? -1 : 0);
      int sy = y.inf ? y.inf : (y.val > 0 ? 1 : y.val < 0 ? -1 : 0);
      if (sx == 0 || sy == 0) throw out_of_table_domain("0*inf");
      return Ext{sx * sy, 0};
    }
    case Expr::K::Div: {
      Ext x = eval_ext(e->a, env), y = eval_ext(e->b, env);
      if (y.inf) throw out_of_table_domain("x/inf");
      if (x.inf) {
        if (y.val == 0) throw out_of_table_domain("inf/0");
        return Ext{y.val > 0 ? x.inf : -x.inf, 0};
      }
      if (y.val == 0 || x.val % y.val != 0) throw out_of_table_domain("inexact");
      return fin(x.val / y.val);
    }
    default: {
      // Mod / Pow / Binom / Gcd of an infinite quantity are undetermined.
      if (mentions(e, 'p') && env.at('p') == 0) throw out_of_table_domain("p-form");
      Env env2 = env;
      return fin(eval(e, env2));
    }
  }
}

int cmp_ext(const Ext& x, const Ext& y) {
  if (x.inf != y.inf) return x.inf < y.inf ? -1 : 1;
  if (x.inf != 0) throw out_of_table_domain("inf cmp inf");
  return x.val < y.val ? -1 : x.val > y.val ? 1 : 0;
}

bool eval_atom(const Atom& a, const Env& env) {
  const std::int64_t p = env.at('p');
  if (a.kind == Atom::Kind::Div || a.kind == Atom::Kind::Ndiv) {
    bool divides = false;
    if (p != 0) divides = eval_big(a.rhs, env) % p == 0;
    return a.kind == Atom::Kind::Div ? divides : !divides;
  }
  int c;
  if (p == 0 && (mentions(a.lhs, 'p') || mentions(a.rhs, 'p')))
    c = cmp_ext(eval_ext(a.lhs, env), eval_ext(a.rhs, env));
  else {
    Int l = eval_big(a.lhs, env), r = eval_big(a.rhs, env);
    c = l < r ? -1 : l > r ? 1 : 0;
  }
  if (a.op == "=") return c == 0;
  if (a.op == "!=") return c != 0;
  if (a.op == "<") return c < 0;
  if (a.op == "<=") return c <= 0;
  if (a.op == ">") return c > 0;
  if (a.op == ">=") return c >= 0;
  throw parse_error("bad comparison op " + a.op);
}

Atom parse_atom(const std::string& s) {
  // "p div <expr>" / "p ndiv <expr>" / "<expr> OP <expr>"
  std::string t = trim(s);
  if (t.rfind("p div ", 0) == 0)
    return Atom{Atom::Kind::Div, "", parse_expr("p"), parse_expr(t.substr(6))};
  if (t.rfind("p ndiv ", 0) == 0)
    return Atom{Atom::Kind::Ndiv, "", parse_expr("p"), parse_expr(t.substr(7))};
  static const char* ops[] = {"!=", "<=", ">=", "=", "<", ">"};
  for (const char* op : ops) {
    int depth = 0;
    for (std::size_t i = 0; i + std::strlen(op) <= t.size(); ++i) {
      char ch = t[i];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && t.compare(i, std::strlen(op), op) == 0) {
        // avoid matching "=" inside "!=", "<=", ">="
        if (std::strcmp(op, "=") == 0 && i > 0 &&
            (t[i - 1] == '!' || t[i - 1] == '<' || t[i - 1] == '>'))
          continue;
        return Atom{Atom::Kind::Cmp, op, parse_expr(trim(t.substr(0, i))),
                    parse_expr(trim(t.substr(i + std::strlen(op))))};
      }
    }
  }
  throw parse_error("bad condition atom '" + s + "'");
}

std::string render_atom(const Atom& a) {
  if (a.kind == Atom::Kind::Div) return "p div " + render(a.rhs);
  if (a.kind == Atom::Kind::Ndiv) return "p ndiv " + render(a.rhs);
  return render(a.lhs) + a.op + render(a.rhs);
}

std::vector<std::string> split_word(const std::string& s, const std::string& word) {
  // split on " word " at depth 0
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  const std::string pat = " " + word + " ";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + pat.size() <= s.size() && s.compare(i, pat.size(), pat) == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + pat.size();
      i += pat.size() - 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

}  // namespace

Condition parse_condition(const std::string& s) {
  Condition c;
  std::string t = trim(s);
  if (t.empty() || t == "-") return c;
  for (const std::string& clause : split_top(t, ',')) {
    std::vector<Atom> atoms;
    for (const std::string& a : split_word(clause, "or")) atoms.push_back(parse_atom(a));
    c.clauses.push_back(std::move(atoms));
  }
  return c;
}

std::string render(const Condition& c) {
  if (c.trivial()) return "-";
  std::string out;
  for (std::size_t i = 0; i < c.clauses.size(); ++i) {
    if (i) out += ", ";
    for (std::size_t j = 0; j < c.clauses[i].size(); ++j) {
      if (j) out += " or ";
      out += render_atom(c.clauses[i][j]);
    }
  }
  return out;
}

bool eval(const Condition& c, const Env& env) {
  for (const auto& clause : c.clauses) {
    bool any = false;
    for (const Atom& a : clause) {
      try {
        if (eval_atom(a, env)) {
          any = true;
          break;
        }
      } catch (const out_of_table_domain&) {
        // undetermined at p = 0: the atom does not hold
      }
    }
    if (!any) return false;
  }
  return true;
}

bool mentions_var(const Condition& c, char var) {
  for (const auto& clause : c.clauses)
    for (const Atom& a : clause)
      if (mentions(a.lhs, var) || mentions(a.rhs, var)) return true;
  return false;
}

// ----------------------------------------------------------- weight patterns

namespace {

WeightPattern parse_pattern(const std::string& body, int line) {
  // "<term>+<term>+...[; side-conditions]"
  WeightPattern pat;
  auto parts = split_top(body, ';');
  if (parts.empty() || parts.size() > 2) fail_parse(line, "bad weight pattern '" + body + "'");
  if (parts.size() == 2) pat.side = parse_condition(parts[1]);
  for (const std::string& ts : split_top(parts[0], '+')) {
    // term: [coef*]w[index]
    std::size_t w = ts.rfind("w[");
    if (w == std::string::npos || ts.back() != ']')
      fail_parse(line, "bad weight term '" + ts + "'");
    Term term;
    term.index = parse_expr(ts.substr(w + 2, ts.size() - w - 3));
    if (w > 0) {
      std::string coef = trim(ts.substr(0, w));
      if (coef.empty() || coef.back() != '*') fail_parse(line, "bad coefficient in '" + ts + "'");
      term.coef = parse_expr(trim(coef.substr(0, coef.size() - 1)));
    }
    pat.terms.push_back(std::move(term));
  }
  for (const Term& t : pat.terms) {
    if (mentions(t.coef, 'p') || mentions(t.index, 'p')) pat.mentions_p = true;
    for (char v : {'a', 'b', 'c', 'i'})
      if ((mentions(t.coef, v) || mentions(t.index, v)) &&
          std::find(pat.free_vars.begin(), pat.free_vars.end(), v) == pat.free_vars.end())
        pat.free_vars.push_back(v);
  }
  // every free coefficient variable must appear as a bare coefficient somewhere
  for (char v : pat.free_vars) {
    if (v == 'i') continue;
    bool bare = false;
    for (const Term& t : pat.terms)
      if (t.coef && t.coef->k == Expr::K::Var && t.coef->var == v) bare = true;
    if (!bare) fail_parse(line, std::string("free variable ") + v + " has no bare coefficient");
  }
  return pat;
}

std::string render_pattern(const WeightPattern& pat) {
  std::string out = "{";
  for (std::size_t i = 0; i < pat.terms.size(); ++i) {
    if (i) out += "+";
    const Term& t = pat.terms[i];
    if (t.coef) out += render_at(t.coef, 2) + "*";
    out += "w[" + render(t.index) + "]";
  }
  if (!pat.side.trivial()) out += "; " + render(pat.side);
  out += "}";
  return out;
}

// Attempts to bind the pattern against lambda; env carries n and p.
std::optional<Env> match_pattern(const WeightPattern& pat, int n, std::int64_t p,
                                 const Weight& lambda, const Env& base) {
  if (p == 0 && pat.mentions_p) return std::nullopt;
  bool has_i =
      std::find(pat.free_vars.begin(), pat.free_vars.end(), 'i') != pat.free_vars.end();
  const int i_lo = has_i ? 1 : 0, i_hi = has_i ? n : 0;
  for (int iv = i_lo; iv <= i_hi; ++iv) {
    Env env = base;
    if (has_i) env['i'] = iv;
    std::vector<std::int64_t> idx(pat.terms.size());
    bool ok = true;
    for (std::size_t t = 0; t < pat.terms.size() && ok; ++t) {
      try {
        idx[t] = eval(pat.terms[t].index, env);
      } catch (const error&) {
        ok = false;
        break;
      }
      if (idx[t] < 1 || idx[t] > n) ok = false;
    }
    if (!ok) continue;
    // bind bare coefficient variables from lambda
    for (char v : pat.free_vars) {
      if (v == 'i') continue;
      for (std::size_t t = 0; t < pat.terms.size(); ++t) {
        const Term& tm = pat.terms[t];
        if (tm.coef && tm.coef->k == Expr::K::Var && tm.coef->var == v) {
          env[v] = lambda[static_cast<std::size_t>(idx[t] - 1)];
          break;
        }
      }
    }
    Weight w(static_cast<std::size_t>(n), 0);
    for (std::size_t t = 0; t < pat.terms.size() && ok; ++t) {
      std::int64_t coef = 1;
      if (pat.terms[t].coef) {
        try {
          coef = eval(pat.terms[t].coef, env);
        } catch (const error&) {
          ok = false;
          break;
        }
      }
      w[static_cast<std::size_t>(idx[t] - 1)] += coef;
    }
    if (!ok || w != lambda) continue;
    if (!eval(pat.side, env)) continue;
    return env;
  }
  return std::nullopt;
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;  // D3 is normalized away
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

int max_rank_of(Family f, int cap) {
  switch (f) {
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 2;
    default: return cap;
  }
}

}  // namespace

// ----------------------------------------------------------------- row parse

namespace {

SimpleType parse_concrete_type(const std::string& s, int line) {
  try {
    return parse_simple_type(s);
  } catch (const error& e) {
    fail_parse(line, e.what());
  }
}

TableRow parse_row(const std::string& text, int line) {
  auto fields = split_top(text, '|');
  if (fields.size() < 5) fail_parse(line, "expected at least 5 '|' fields");
  TableRow row;
  row.line_no = line;

  auto tid = parse_table_id(fields[0]);
  if (!tid) fail_parse(line, "unknown table id '" + fields[0] + "'");
  row.table = *tid;

  {  // family + rank conditions
    std::string tf = fields[1];
    auto sp = tf.find(' ');
    std::string fam = sp == std::string::npos ? tf : tf.substr(0, sp);
    if (fam.size() != 1 || fam[0] < 'A' || fam[0] > 'G')
      fail_parse(line, "bad family '" + fam + "'");
    row.family = static_cast<Family>(fam[0]);
    if (sp != std::string::npos) row.rank_cond = parse_condition(trim(tf.substr(sp)));
  }

  if (fields[2] != "-")
    for (const std::string& g : split_top(fields[2], ',')) {
      if (g.size() < 2 || g.front() != '{' || g.back() != '}')
        fail_parse(line, "weight pattern must be braced: '" + g + "'");
      row.weights.push_back(parse_pattern(g.substr(1, g.size() - 2), line));
    }

  row.p_cond = parse_condition(fields[3]);

  std::string payload = fields[4];
  if (payload != "-") {
    if (payload.rfind("m0=", 0) == 0) {
      for (const std::string& br : split_top(payload.substr(3), ';')) {
        auto parts = split_word(br, "if");
        M0Branch b;
        b.value = parse_expr(parts[0]);
        if (parts.size() == 2) b.cond = parse_condition(parts[1]);
        else if (parts.size() > 2)
          fail_parse(line, "bad m0 branch '" + br + "'");
        row.m0.push_back(std::move(b));
      }
    } else if (payload.rfind("dim0=", 0) == 0) {
      row.dim = {DimPayload::Tag::Char0, parse_expr(trim(payload.substr(5)))};
    } else if (payload.rfind("dimp=", 0) == 0) {
      row.dim = {DimPayload::Tag::CharP, parse_expr(trim(payload.substr(5)))};
    } else if (trim(payload) == "dim=?") {
      row.dim = {DimPayload::Tag::NotKnown, nullptr};
    } else if (payload.rfind("M=", 0) == 0) {
      for (const std::string& part : split_top(payload.substr(2), '+'))
        row.exc_factors.push_back(parse_concrete_type(part, line));
    } else if (payload.rfind("G=", 0) == 0) {
      std::string g = trim(payload.substr(2));
      PairTarget tgt;
      if (g.size() >= 2 && g[1] == '[') {
        if (g.back() != ']') fail_parse(line, "bad pair target '" + g + "'");
        tgt.family = static_cast<Family>(g[0]);
        tgt.rank = parse_expr(g.substr(2, g.size() - 3));
      } else {
        SimpleType t = parse_concrete_type(g, line);
        tgt.family = t.family;
        tgt.rank = parse_expr(std::to_string(t.rank));
      }
      row.pair_target = std::move(tgt);
    } else {
      fail_parse(line, "bad payload '" + payload + "'");
    }
  }

  for (std::size_t f = 5; f < fields.size(); ++f) {
    if (fields[f].rfind("note=", 0) == 0) row.note = trim(fields[f].substr(5));
    else
      fail_parse(line, "bad trailing field '" + fields[f] + "'");
  }
  return row;
}

}  // namespace

std::string render_row(const TableRow& row) {
  std::string out = "row " + to_string(row.table) + " | ";
  out += std::string(1, static_cast<char>(row.family));
  out += " " + render(row.rank_cond);
  out += " | ";
  if (row.weights.empty()) out += "-";
  else
    for (std::size_t i = 0; i < row.weights.size(); ++i) {
      if (i) out += ", ";
      out += render_pattern(row.weights[i]);
    }
  out += " | " + render(row.p_cond) + " | ";
  if (!row.m0.empty()) {
    out += "m0= ";
    for (std::size_t i = 0; i < row.m0.size(); ++i) {
      if (i) out += "; ";
      out += render(row.m0[i].value);
      if (row.m0[i].cond) out += " if " + render(*row.m0[i].cond);
    }
  } else if (row.dim.tag == DimPayload::Tag::Char0) {
    out += "dim0= " + render(row.dim.expr);
  } else if (row.dim.tag == DimPayload::Tag::CharP) {
    out += "dimp= " + render(row.dim.expr);
  } else if (row.dim.tag == DimPayload::Tag::NotKnown) {
    out += "dim=?";
  } else if (!row.exc_factors.empty()) {
    out += "M= ";
    for (std::size_t i = 0; i < row.exc_factors.size(); ++i) {
      if (i) out += "+";
      out += to_string(row.exc_factors[i]);
    }
  } else if (row.pair_target) {
    out += "G= " + std::string(1, static_cast<char>(row.pair_target->family)) + "[" +
           render(row.pair_target->rank) + "]";
  } else {
    out += "-";
  }
  if (!row.note.empty()) out += " | note= " + row.note;
  return out;
}

// ----------------------------------------------------------------- the store

namespace {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

TableStore TableStore::parse_text(const std::string& text, bool verify_checksum) {
  if (trim(text).empty()) throw parse_error("tables: empty file");
  TableStore store;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_version = false, have_checksum = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (line_no == 1) {
      if (t != "rtk-tables 1")
        throw schema_mismatch("tables: unsupported version header '" + t + "'");
      have_version = true;
      store.lines_.push_back(line);
      continue;
    }
    if (t.rfind("checksum ", 0) == 0 && !have_checksum) {
      have_checksum = true;
      store.declared_checksum_ = std::strtoull(t.substr(9).c_str(), nullptr, 16);
      store.lines_.push_back("\x02");  // checksum slot, re-rendered on serialize
      continue;
    }
    if (t.empty() || t[0] == '#') {
      store.lines_.push_back(line);
      continue;
    }
    if (t.rfind("row ", 0) != 0) fail_parse(line_no, "expected 'row', comment, or blank");
    store.all_rows_.push_back(parse_row(t.substr(4), line_no));
    store.lines_.push_back("\x01");  // row slot marker
  }
  if (!have_version || !have_checksum)
    throw schema_mismatch("tables: missing version/checksum header");
  for (std::size_t i = 0; i < store.all_rows_.size(); ++i)
    store.by_table_[store.all_rows_[i].table].push_back(i);
  if (verify_checksum && store.checksum() != store.declared_checksum_)
    throw schema_mismatch("tables: checksum mismatch (declared " +
                          hex16(store.declared_checksum_) + ", computed " +
                          hex16(store.checksum()) + ")");
  return store;
}

TableStore TableStore::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("tables: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

std::uint64_t TableStore::checksum() const {
  std::string all;
  for (const TableRow& r : all_rows_) all += render_row(r) + "\n";
  return fnv1a64(all);
}

std::string TableStore::serialize() const {
  std::string out;
  std::size_t row_idx = 0;
  for (const std::string& l : lines_) {
    if (l == "\x01") out += render_row(all_rows_[row_idx++]) + "\n";
    else if (l == "\x02") out += "checksum " + hex16(checksum()) + "\n";
    else
      out += l + "\n";
  }
  return out;
}

std::vector<const TableRow*> TableStore::rows(TableId id) const {
  std::vector<const TableRow*> out;
  auto it = by_table_.find(id);
  if (it == by_table_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&all_rows_[i]);
  return out;
}

std::size_t TableStore::table_count() const { return by_table_.size(); }

std::vector<MatchResult> TableStore::match_all(TableId id, SimpleType t, const Weight& lambda,
                                               std::int64_t p) const {
  std::vector<MatchResult> out;
  for (const TableRow* row : rows(id)) {
    if (row->family != t.family) continue;
    Env env{{'n', t.rank}, {'p', p}};
    if (!eval(row->rank_cond, env)) continue;
    if (!eval(row->p_cond, env)) continue;
    for (std::size_t pi = 0; pi < row->weights.size(); ++pi) {
      auto bound = match_pattern(row->weights[pi], t.rank, p, lambda, env);
      if (bound) out.push_back(MatchResult{row, static_cast<int>(pi), *bound});
    }
  }
  return out;
}

std::optional<MatchResult> TableStore::match(TableId id, SimpleType t, const Weight& lambda,
                                             std::int64_t p) const {
  auto all = match_all(id, t, lambda, p);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Int TableStore::eval_m0(const MatchResult& m) const {
  for (const M0Branch& b : m.row->m0) {
    if (!b.cond || eval(*b.cond, m.env)) return eval_big(b.value, m.env);
  }
  throw out_of_table_domain("no zero-multiplicity branch applies at line " +
                            std::to_string(m.row->line_no));
}

std::optional<Int> TableStore::eval_dim(const MatchResult& m) const {
  const std::int64_t p = m.env.at('p');
  switch (m.row->dim.tag) {
    case DimPayload::Tag::Char0: return eval_big(m.row->dim.expr, m.env);
    case DimPayload::Tag::CharP:
      if (p == 0) return std::nullopt;
      return eval_big(m.row->dim.expr, m.env);
    default: return std::nullopt;
  }
}

bool TableStore::exc_contains(SimpleType H, std::vector<SimpleType> M, std::int64_t p) const {
  std::sort(M.begin(), M.end());
  for (const TableRow* row : rows(TableId::TEXC)) {
    if (row->family != H.family) continue;
    Env env{{'n', H.rank}, {'p', p}};
    if (!eval(row->rank_cond, env) || !eval(row->p_cond, env)) continue;
    std::vector<SimpleType> factors = row->exc_factors;
    std::sort(factors.begin(), factors.end());
    if (factors == M) return true;
  }
  return false;
}

std::vector<SimpleType> TableStore::pair_subgroups(SimpleType H, std::int64_t p) const {
  std::vector<SimpleType> out;
  for (const TableRow* row : rows(TableId::TPAIRS)) {
    if (row->family != H.family || !row->pair_target) continue;
    Env env{{'n', H.rank}, {'p', p}};
    if (!eval(row->rank_cond, env) || !eval(row->p_cond, env)) continue;
    SimpleType g{row->pair_target->family,
                 static_cast<int>(eval(row->pair_target->rank, env))};
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

void TableStore::for_each_char0_instance(
    const TableRow& row, int max_rank, const Int& max_dim,
    const std::function<Int(SimpleType, const Weight&)>& dim_fn,
    const std::function<void(SimpleType, const Weight&, int, const Env&)>& fn,
    bool ignore_p_cond) const {
  if (row.table == TableId::TEXC || row.table == TableId::TPAIRS) return;
  for (int n = min_rank(row.family); n <= max_rank_of(row.family, max_rank); ++n) {
    SimpleType t{row.family, n};
    Env env0{{'n', n}, {'p', 0}};
    if (!eval(row.rank_cond, env0)) continue;
    if (!ignore_p_cond && !eval(row.p_cond, env0)) continue;
    for (std::size_t pi = 0; pi < row.weights.size(); ++pi) {
      const WeightPattern& pat = row.weights[pi];
      if (pat.mentions_p) continue;
      bool has_i =
          std::find(pat.free_vars.begin(), pat.free_vars.end(), 'i') != pat.free_vars.end();
      char coef_var = 0;
      for (char v : pat.free_vars)
        if (v != 'i') coef_var = v;
      const int i_lo = has_i ? 1 : 0, i_hi = has_i ? n : 0;
      for (int iv = i_lo; iv <= i_hi; ++iv) {
        Env env = env0;
        if (has_i) env['i'] = iv;
        for (std::int64_t cv = coef_var ? 1 : 0;; ++cv) {
          if (coef_var) env[coef_var] = cv;
          Weight w(static_cast<std::size_t>(n), 0);
          bool ok = true;
          for (const Term& tm : pat.terms) {
            std::int64_t ix, coef = 1;
            try {
              ix = eval(tm.index, env);
              if (tm.coef) coef = eval(tm.coef, env);
            } catch (const error&) {
              ok = false;
              break;
            }
            if (ix < 1 || ix > n) {
              ok = false;
              break;
            }
            w[static_cast<std::size_t>(ix - 1)] += coef;
          }
          if (ok && dim_fn(t, w) > max_dim) break;  // dims grow with the coefficient
          if (ok && eval(pat.side, env) && !is_zero(w)) fn(t, w, static_cast<int>(pi), env);
          if (!coef_var) break;
          if (!ok) break;
        }
      }
    }
  }
}

std::string canonicalize_tables_text(const std::string& text) {
  TableStore store = TableStore::parse_text(text, /*verify_checksum=*/false);
  return store.serialize();
}

std::vector<std::pair<SimpleType, Weight>> query_aliases(SimpleType t, const Weight& lambda) {
  if (t.family == Family::B && t.rank == 2)
    return {{SimpleType{Family::C, 2}, Weight{lambda[1], lambda[0]}}};
  if (t.family == Family::D && t.rank == 3)
    return {{SimpleType{Family::A, 3}, Weight{lambda[1], lambda[0], lambda[2]}}};
  if (t.family == Family::D && t.rank == 4) {
    std::vector<std::pair<SimpleType, Weight>> out;
    int idx[3] = {0, 2, 3};
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
      Weight w = lambda;
      for (int k = 0; k < 3; ++k) w[static_cast<std::size_t>(idx[perm[k]])] = lambda[static_cast<std::size_t>(idx[k])];
      if (std::none_of(out.begin(), out.end(),
                       [&](const auto& q) { return q.second == w; }))
        out.emplace_back(t, std::move(w));
    } while (std::next_permutation(perm, perm + 3));
    return out;
  }
  return {{t, lambda}};
}

std::string default_tables_dir() {
  if (const char* env = std::getenv("RTK_TABLES_DIR")) return env;
  return RTK_DATA_DIR;
}

std::string default_tables_path() { return default_tables_dir() + "/tables.txt"; }
std::string default_embeddings_path() { return default_tables_dir() + "/embeddings.txt"; }

const TableStore& default_store() {
  static TableStore store = TableStore::load(default_tables_path());
  return store;
}

}  // namespace rtk::tables

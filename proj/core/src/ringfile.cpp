#include "ringlab/ringfile.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ringlab {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string drop_comment(const std::string& s) {
  auto p = s.find('#');
  return p == std::string::npos ? s : s.substr(0, p);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else
      cur += ch;
  }
  out.push_back(strip(cur));
  return out;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower((unsigned char)c));
  return s;
}

// recursive-descent expression parser: sum of terms, a term is a product of
// factors with '*' optional between them
struct PolyParser {
  const std::string& s;
  const std::vector<std::string>& vars;
  std::size_t pos = 0, line;

  PolyParser(const std::string& text, const std::vector<std::string>& v,
             std::size_t line_no)
      : s(text), vars(v), line(line_no) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, pos + 1, msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
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

  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected a number");
    return BigInt(s.substr(start, pos - start));
  }

  Rational number() {
    BigInt num = integer();
    if (eat('/')) {
      BigInt den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::optional<std::size_t> ident() {
    skip_ws();
    if (pos >= s.size() || !std::isalpha((unsigned char)s[pos])) return {};
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name || vars[i] == lower(name)) return i;
    pos = start;
    fail("unknown variable '" + name + "'");
  }

  unsigned exponent() {
    BigInt e = integer();
    if (e < 0 || e > 1024) fail("exponent out of range");
    return e.convert_to<unsigned>();
  }

  Poly factor() {
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) {
        unsigned e = exponent();
        Poly r = Poly::constant(vars.size(), 1);
        for (unsigned i = 0; i < e; ++i) r = r * p;
        return r;
      }
      return p;
    }
    char c = peek();
    if (std::isdigit((unsigned char)c))
      return Poly::constant(vars.size(), number());
    auto vi = ident();
    if (!vi) fail("expected a coefficient, variable, or '('");
    unsigned e = eat('^') ? exponent() : 1;
    return Poly::monomial(Monomial::var(vars.size(), *vi, e));
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || std::isdigit((unsigned char)c) ||
           std::isalpha((unsigned char)c);
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      if (eat('*')) {
        p = p * factor();
        continue;
      }
      if (starts_factor()) {
        p = p * factor();
        continue;
      }
      return p;
    }
  }

  Poly expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly p = term();
    if (neg) p = -p;
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p += -term();
      else return p;
    }
  }

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return p;
  }
};

std::vector<std::string> infer_vars_from_dual(const std::string& text,
                                              std::size_t line_no) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha((unsigned char)text[i])) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
        ++i;
      names.insert(lower(text.substr(start, i - start)));
    } else
      ++i;
  }
  if (names.empty())
    throw ParseError(line_no, 1, "inverse_system has no variables");
  return {names.begin(), names.end()};
}

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                std::size_t line_no) {
  return PolyParser(text, vars, line_no).parse();
}

RingFile parse_ring_file(const std::string& text) {
  RingFile rf;
  bool saw_field = false, saw_vars = false, saw_relations = false;
  enum class Block { none, relations, module_matrix } block = Block::none;
  ModuleSpec* open_module = nullptr;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(drop_comment(raw));
    if (line.empty()) continue;

    auto key_is = [&](const std::string& k) {
      return line.size() > k.size() && line.compare(0, k.size(), k) == 0 &&
             (line[k.size()] == ':' || line[k.size()] == ' ');
    };

    if (key_is("field")) {
      std::string v = strip(line.substr(line.find(':') + 1));
      if (v == "QQ") {
        rf.rational_field = true;
        rf.prime = 0;
      } else if (v.rfind("GF(", 0) == 0 && v.back() == ')') {
        rf.rational_field = false;
        try {
          rf.prime = std::stoll(v.substr(3, v.size() - 4));
        } catch (...) {
          throw ParseError(line_no, 1, "bad field '" + v + "'");
        }
        if (rf.prime < 2) throw ParseError(line_no, 1, "bad prime");
      } else
        throw ParseError(line_no, 1, "field must be GF(p) or QQ");
      saw_field = true;
      block = Block::none;
    } else if (key_is("vars")) {
      for (auto& v : split(line.substr(line.find(':') + 1), ','))
        if (!v.empty()) rf.pres.vars.push_back(v);
      if (rf.pres.vars.empty()) throw ParseError(line_no, 1, "empty var list");
      saw_vars = true;
      block = Block::none;
    } else if (line == "relations:" || key_is("relations")) {
      std::string rest = strip(line.substr(line.find(':') + 1));
      saw_relations = true;
      block = Block::relations;
      if (!rest.empty())
        rf.pres.relations.push_back(parse_poly(rest, rf.pres.vars, line_no));
    } else if (key_is("inverse_system")) {
      std::string rest = strip(line.substr(line.find(':') + 1));
      if (rest.empty()) throw ParseError(line_no, 1, "empty inverse_system");
      if (!saw_vars) {
        rf.pres.vars = infer_vars_from_dual(rest, line_no);
        saw_vars = true;
      }
      rf.inverse_system = parse_poly(lower(rest), rf.pres.vars, line_no);
      block = Block::none;
    } else if (key_is("module")) {
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError(line_no, 1, "module line needs ':'");
      ModuleSpec ms;
      ms.name = strip(line.substr(6, colon - 6));
      if (ms.name.empty()) throw ParseError(line_no, 1, "module needs a name");
      std::string rest = strip(line.substr(colon + 1));
      if (rest.rfind("quotient", 0) == 0) {
        ms.is_quotient = true;
        for (auto& g : split(rest.substr(8), ','))
          if (!g.empty())
            ms.quotient_gens.push_back(parse_poly(g, rf.pres.vars, line_no));
        rf.modules.push_back(std::move(ms));
        block = Block::none;
      } else if (rest.rfind("matrix", 0) == 0) {
        ms.is_quotient = false;
        rf.modules.push_back(std::move(ms));
        open_module = &rf.modules.back();
        block = Block::module_matrix;
        std::string inline_rows = strip(rest.substr(6));
        if (!inline_rows.empty())
          for (auto& row : split(inline_rows, ';')) {
            std::vector<Poly> r;
            for (auto& entry : split(row, ','))
              r.push_back(parse_poly(entry, rf.pres.vars, line_no));
            open_module->matrix.push_back(std::move(r));
          }
      } else
        throw ParseError(line_no, 1, "module must be 'quotient' or 'matrix'");
    } else if (block == Block::relations) {
      rf.pres.relations.push_back(parse_poly(line, rf.pres.vars, line_no));
    } else if (block == Block::module_matrix) {
      std::vector<Poly> r;
      for (auto& entry : split(line, ','))
        r.push_back(parse_poly(entry, rf.pres.vars, line_no));
      open_module->matrix.push_back(std::move(r));
    } else {
      throw ParseError(line_no, 1, "unrecognized line '" + line + "'");
    }
  }

  if (rf.inverse_system && saw_relations)
    throw ParseError(line_no, 1,
                     "both relations and inverse_system present");
  if (!rf.inverse_system && rf.pres.relations.empty())
    throw ParseError(line_no, 1, "no relations and no inverse_system");
  if (!saw_vars) throw ParseError(line_no, 1, "missing vars");
  (void)saw_field;  // default field is GF(32003)
  return rf;
}

std::string print_ring_file(const RingFile& rf) {
  std::ostringstream os;
  if (rf.rational_field)
    os << "field: QQ\n";
  else
    os << "field: GF(" << rf.prime << ")\n";
  os << "vars: ";
  for (std::size_t i = 0; i < rf.pres.vars.size(); ++i)
    os << (i ? ", " : "") << rf.pres.vars[i];
  os << "\n";
  if (rf.inverse_system) {
    os << "inverse_system: " << rf.inverse_system->str(rf.pres.vars) << "\n";
  } else {
    os << "relations:\n";
    for (auto& f : rf.pres.relations)
      os << "  " << f.str(rf.pres.vars) << "\n";
  }
  for (auto& m : rf.modules) {
    os << "module " << m.name << ": ";
    if (m.is_quotient) {
      os << "quotient ";
      for (std::size_t i = 0; i < m.quotient_gens.size(); ++i)
        os << (i ? ", " : "") << m.quotient_gens[i].str(rf.pres.vars);
    } else {
      os << "matrix\n";
      for (auto& row : m.matrix) {
        os << "  ";
        for (std::size_t i = 0; i < row.size(); ++i)
          os << (i ? ", " : "") << row[i].str(rf.pres.vars);
        os << "\n";
      }
      continue;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ringlab

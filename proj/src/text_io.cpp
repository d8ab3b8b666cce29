#include "fsplit/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace fsplit::algebra {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("polynomial syntax error: " + what);
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) bad(std::string("expected '") + c + "'");
  }
  std::uint64_t number() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      bad("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (std::uint64_t(1) << 62)) bad("number too large");
      ++pos_;
    }
    return v;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  bool peek_letter() {
    skip_ws();
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
  }

  VarId variable() {
    skip_ws();
    if (pos_ >= s_.size()) bad("expected a variable");
    char kind = s_[pos_++];
    switch (kind) {
      case 't':
        return var_t();
      case 'v': {
        expect('[');
        std::uint64_t k = number();
        expect(']');
        if (k > 0xFFFF) bad("variable index too large");
        return var_v(static_cast<std::uint16_t>(k));
      }
      case 'x':
      case 'y':
      case 'z': {
        expect('[');
        std::uint64_t i = number();
        expect(']');
        expect('[');
        std::uint64_t j = number();
        expect(']');
        if (i > 0xFFFF || j > 0xFFFF) bad("variable index too large");
        auto ii = static_cast<std::uint16_t>(i), jj = static_cast<std::uint16_t>(j);
        if (jj >= ii) bad("matrix variable index must satisfy j < i");
        return kind == 'x' ? var_x(ii, jj) : kind == 'y' ? var_y(ii, jj) : var_z(ii, jj);
      }
      default:
        bad(std::string("unknown variable '") + kind + "'");
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect_vars(std::string_view text, std::set<VarId>& out) {
  Lexer lex(text);
  while (!lex.done()) {
    if (lex.peek_letter()) {
      out.insert(lex.variable());
    } else if (lex.peek_digit()) {
      lex.number();
    } else if (!(lex.accept('+') || lex.accept('*') || lex.accept('^'))) {
      bad("unexpected character");
    }
  }
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const VariableTable& table = f.ring().table();
  std::string out;
  bool first_term = true;
  for (const Polynomial::Term& t : f.terms()) {
    if (!first_term) out += " + ";
    first_term = false;
    bool wrote = false;
    if (t.coef != 1 || t.mon.is_one()) {
      out += std::to_string(t.coef);
      wrote = true;
    }
    for (std::size_t k = 0; k < table.size(); ++k) {
      Monomial::Exp e = t.mon.exp(k);
      if (e == 0) continue;
      if (wrote) out += "*";
      out += to_string(table.at(k));
      if (e > 1) out += "^" + std::to_string(e);
      wrote = true;
    }
  }
  return out;
}

VarId parse_var(std::string_view token) {
  Lexer lex(token);
  VarId v = lex.variable();
  if (!lex.done()) bad("trailing characters after variable");
  return v;
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Lexer lex(text);
  PolyBuilder out(ring);
  if (lex.done()) bad("empty input");
  do {
    // term := number | [number "*"] var-factor ("*" var-factor)*
    std::uint64_t coef = 1;
    Monomial mon(ring.nvars());
    bool saw_factor = false;
    if (lex.peek_digit()) {
      coef = lex.number();
      saw_factor = true;
      if (!lex.accept('*')) {
        out.add(std::move(mon), coef);
        continue;
      }
      saw_factor = false;
    }
    do {
      if (!lex.peek_letter()) bad("expected a variable");
      VarId v = lex.variable();
      auto idx = ring.table().index_of(v);
      if (!idx) throw std::invalid_argument("variable not in table: " + to_string(v));
      std::uint64_t e = 1;
      if (lex.accept('^')) e = lex.number();
      std::uint64_t cur = mon.exp(*idx);
      if (cur + e > 0xFFFF) bad("exponent too large");
      mon.set_exp(*idx, static_cast<Monomial::Exp>(cur + e));
      saw_factor = true;
    } while (lex.accept('*'));
    if (!saw_factor) bad("empty term");
    out.add(std::move(mon), coef);
  } while (lex.accept('+'));
  if (!lex.done()) bad("unexpected trailing input");
  return out.finish();
}

Ring inferred_ring(const std::vector<std::string_view>& texts, const Characteristic& p) {
  std::set<VarId> vars;
  for (std::string_view t : texts) collect_vars(t, vars);
  std::vector<VarId> ordered(vars.begin(), vars.end());
  // VarId's natural order is (kind, i, j) ascending, which is the documented
  // inference order: x before y before z before v before t, indices ascending.
  return Ring(p, make_table(std::move(ordered)));
}

Ring inferred_ring(std::string_view text, const Characteristic& p) {
  return inferred_ring(std::vector<std::string_view>{text}, p);
}

}  // namespace fsplit::algebra

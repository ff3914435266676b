#include "qqkit/latex.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "qqkit/errors.hpp"

namespace qq {

// ---------------------------------------------------------------- names

LatexNames LatexNames::for_weights(const Quiver& q, const WeightConfig& w) {
  LatexNames n = base(q);
  std::size_t k = 0;
  for (const auto& [node, x] : w.params) {
    (void)node;
    ++k;
    if (x.entries().size() != 1 || x.entries().front().second != 1) continue;
    const Generator& g = x.entries().front().first;
    if (g.kind != GenKind::x || g == Generator::x()) continue;
    n.add(g, w.params.size() == 1 ? "x" : "x_" + (k < 10 ? std::to_string(k) : "{" + std::to_string(k) + "}"));
  }
  return n;
}

LatexNames LatexNames::base(const Quiver& q) {
  LatexNames n;
  if (q.nodes().size() == 1) n.default_node = q.nodes().front().id;
  return n;
}

std::string LatexNames::name_of(const Generator& g) const {
  if (auto it = names.find(g); it != names.end()) return it->second;
  switch (g.kind) {
    case GenKind::q1: return "q_1";
    case GenKind::q2: return "q_2";
    case GenKind::mu: return "\\mu";
    case GenKind::qfrak: return g.node.empty() ? "\\mathfrak{q}" : "\\mathfrak{q}_{" + g.node + "}";
    case GenKind::x: break;
  }
  return g.node.empty() ? "x" : "x_{" + g.node + "," + std::to_string(g.alpha) + "}";
}

Generator LatexNames::generator_of(const std::string& name) const {
  for (const auto& [g, s] : names)
    if (s == name) return g;
  if (name == "x") return Generator::x();
  if (name.size() > 4 && name.compare(0, 3, "x_{") == 0 && name.back() == '}') {
    auto comma = name.find(',');
    if (comma != std::string::npos) {
      std::string node = name.substr(3, comma - 3);
      std::string a = name.substr(comma + 1, name.size() - comma - 2);
      if (!node.empty() && !a.empty() && std::all_of(a.begin(), a.end(), ::isdigit))
        return Generator::x(node, std::stoi(a));
    }
  }
  throw ValidationError("unknown parameter symbol '" + name + "'");
}

// ---------------------------------------------------------------- emitter

namespace {

std::string power_suffix(int e) {
  if (e == 1) return "";
  if (e >= 2 && e <= 9) return "^" + std::to_string(e);
  return "^{" + std::to_string(e) + "}";
}

std::string join_factors(const std::vector<std::pair<Generator, int>>& es, const LatexNames& n) {
  std::string out;
  for (const auto& [g, e] : es) {
    if (!out.empty()) out += " ";
    out += n.name_of(g) + power_suffix(e);
  }
  return out;
}

}  // namespace

std::string latex_monomial(const Monomial& m, const LatexNames& n) {
  if (m.is_unit()) return "1";
  std::vector<std::pair<Generator, int>> xnum, xden, rest;
  for (const auto& [g, e] : m.entries()) {
    if (g.kind == GenKind::x)
      (e > 0 ? xnum : xden).emplace_back(g, std::abs(e));
    else
      rest.emplace_back(g, e);
  }
  std::string out;
  if (!xden.empty()) {
    out = "\\frac{" + (xnum.empty() ? std::string("1") : join_factors(xnum, n)) + "}{" + join_factors(xden, n) + "}";
  } else {
    out = join_factors(xnum, n);
  }
  // x factors lead, q and mu factors follow.
  std::string tail = join_factors(rest, n);
  if (!out.empty() && !tail.empty()) out += " ";
  return out + tail;
}

std::string latex_ykey(const YKey& k, const LatexNames& n) {
  std::string head = "\\mathsf{Y}_{";
  if (k.node != n.default_node) head += k.node + ",";
  const Monomial base = k.arg.drop_if([](const Generator& g) { return g.kind == GenKind::q1 || g.kind == GenKind::q2; });
  if (base.entries().size() == 1 && base.entries().front().second == 1 &&
      base.entries().front().first.kind == GenKind::x) {
    int j = k.arg.exponent(Generator::q1()), l = k.arg.exponent(Generator::q2());
    std::string s = head + n.name_of(base.entries().front().first);
    if (j != 0 || l != 0) s += ";" + std::to_string(j) + "," + std::to_string(l);
    return s + "}";
  }
  return head + latex_monomial(k.arg, n) + "}";
}

namespace {

int complexity(const Coefficient& c) {
  int s = 0;
  for (const auto& f : c.factors()) s += std::abs(f.pow);
  return s;
}

int q_weight(const Monomial& z) {
  int s = 0;
  for (const auto& [g, e] : z.entries())
    if (g.kind != GenKind::x) s += std::abs(e);
  return s;
}

struct SFactor {
  int r;
  Monomial z;
  int pow;
};

// S_r(z) = S_r(q1^r q2 / z); keep the representative with the smaller q-part.
Monomial preferred_argument(const Monomial& z, int r) {
  Monomial alt = Monomial::q1(r) * Monomial::q2() / z;
  int a = q_weight(z), b = q_weight(alt);
  if (a != b) return a < b ? z : alt;
  return z < alt ? z : alt;
}

std::vector<SFactor> extract_s_factors(Coefficient& c, int max_r) {
  std::vector<SFactor> out;
  for (;;) {
    bool found = false;
    const int before = complexity(c);
    for (const auto& f : c.factors()) {
      if (f.pow > 0) continue;
      for (int r = 1; r <= max_r && !found; ++r) {
        const Monomial shift = Monomial::q1(r) * Monomial::q2();
        for (const Monomial& z : {f.arg, f.arg.inverse(), f.arg * shift, f.arg.inverse() * shift}) {
          Coefficient d;
          try {
            d = c / s_function_r(z, r);
          } catch (const Error&) {
            continue;
          }
          if (complexity(d) == before - 4) {
            c = d;
            out.push_back({r, preferred_argument(z, r), 1});
            found = true;
            break;
          }
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(out.begin(), out.end(), [](const SFactor& a, const SFactor& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.z < b.z;
  });
  std::vector<SFactor> merged;
  for (const auto& s : out) {
    if (!merged.empty() && merged.back().r == s.r && merged.back().z == s.z)
      ++merged.back().pow;
    else
      merged.push_back(s);
  }
  return merged;
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_poly(const Poly& p, const LatexNames& n) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (it->first.is_unit()) {
      out += latex_rational(c);
    } else {
      if (c != 1) out += latex_rational(c) + " ";
      out += latex_monomial(it->first, n);
    }
  }
  return out;
}

// Coefficient body without its sign; sets neg when the content is negative.
std::string coefficient_body(const Coefficient& c0, const LatexNames& n, int max_r, bool& neg) {
  Coefficient c = c0.kind() == Coefficient::Kind::general
                      ? Coefficient::from_parts(c0.content(), c0.unit(), c0.factors())
                      : c0;
  auto ss = extract_s_factors(c, max_r);
  std::vector<std::string> parts;
  Rational content = c.content();
  neg = content < 0;
  if (neg) content = -content;
  if (content != 1) parts.push_back(latex_rational(content));
  if (!c.unit().is_unit()) parts.push_back(latex_monomial(c.unit(), n));
  for (const auto& s : ss) {
    std::string head = s.r == 1 ? "\\mathscr{S}" : "\\mathscr{S}_" + std::to_string(s.r);
    parts.push_back(head + "\\qty(" + latex_monomial(s.z, n) + ")" + power_suffix(s.pow));
  }
  std::vector<std::string> num, den;
  for (const auto& f : c.factors()) {
    std::string b = "\\qty(1 - " + latex_monomial(f.arg, n) + ")";
    (f.pow > 0 ? num : den).push_back(b + power_suffix(std::abs(f.pow)));
  }
  if (c0.kind() == Coefficient::Kind::general) num.push_back("\\qty(" + latex_poly(c0.residual(), n) + ")");
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
    return out;
  };
  if (!den.empty())
    parts.push_back("\\frac{" + (num.empty() ? std::string("1") : join(num)) + "}{" + join(den) + "}");
  else if (!num.empty())
    parts.push_back(join(num));
  return join(parts);
}

std::string ymonomial_latex(const YMonomial& ym, const LatexNames& n) {
  std::vector<std::string> num, den;
  for (const auto& [k, e] : ym.entries()) (e > 0 ? num : den).push_back(latex_ykey(k, n) + power_suffix(std::abs(e)));
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
    return out;
  };
  if (den.empty()) return num.empty() ? "1" : join(num);
  return "\\frac{" + (num.empty() ? std::string("1") : join(num)) + "}{" + join(den) + "}";
}

}  // namespace

std::string latex_coefficient(const Coefficient& c, const LatexNames& n, int max_r) {
  if (c.is_zero()) return "0";
  bool neg = false;
  std::string body = coefficient_body(c, n, max_r, neg);
  if (body.empty()) body = "1";
  return (neg ? "-" : "") + body;
}

std::string to_latex(const Character& ch, const LatexNames& n, int max_r) {
  std::string out;
  for (const auto& t : ch.terms) {
    bool neg = false;
    std::string body = coefficient_body(t.coeff, n, max_r, neg);
    std::string y = ymonomial_latex(t.ym, n);
    std::string term = body.empty() ? y : (y == "1" ? body : body + " " + y);
    out += out.empty() ? (neg ? "- " : "") : (neg ? " - " : " + ");
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string to_latex(const ClassicalCharacter& ch, const LatexNames& n) {
  std::string out;
  for (const auto& t : ch.terms) {
    Integer c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    std::string y = ymonomial_latex(t.ym, n);
    std::string term = c == 1 ? y : (y == "1" ? c.get_str() : c.get_str() + " " + y);
    out += out.empty() ? (neg ? "- " : "") : (neg ? " - " : " + ");
    out += term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view s, const LatexNames& n) : s_(s), n_(n) {}

  std::vector<TermSum> parse_sides() {
    std::vector<TermSum> sides;
    sides.push_back(parse_sum());
    while (true) {
      skip();
      if (at_end()) break;
      if (peek() == '=') {
        ++p_;
        sides.push_back(parse_sum());
        continue;
      }
      fail("unexpected input");
    }
    return sides;
  }

  Monomial parse_monomial_only() {
    Monomial m = parse_monomial_expr();
    skip_space();
    if (!at_end()) fail("trailing input in monomial");
    return m;
  }

 private:
  std::string_view s_;
  const LatexNames& n_;
  std::size_t p_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t from = p_ > 20 ? p_ - 20 : 0;
    throw ValidationError("latex: " + what + " near '" + std::string(s_.substr(from, 40)) + "'");
  }
  bool at_end() const { return p_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[p_]; }
  bool starts(std::string_view t) const { return s_.substr(p_, t.size()) == t; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  // Skips spacing commands, alignment marks, line breaks and punctuation.
  void skip() {
    for (;;) {
      skip_space();
      if (at_end()) return;
      if (starts("\\\\")) {
        p_ += 2;
        skip_space();
        if (peek() == '[') {
          auto e = s_.find(']', p_);
          if (e == std::string_view::npos) fail("unterminated line break option");
          p_ = e + 1;
        }
        continue;
      }
      if (starts("\\hspace") || starts("\\vspace")) {
        p_ += 7;
        read_braced();
        continue;
      }
      bool skipped = false;
      for (std::string_view w : {"\\nonumber", "\\displaystyle", "\\qquad", "\\quad", "\\,", "\\;", "\\!", "\\ "}) {
        if (starts(w)) {
          p_ += w.size();
          skipped = true;
          break;
        }
      }
      if (skipped) continue;
      char c = peek();
      if (c == '&' || c == ',' || c == '.') {
        ++p_;
        continue;
      }
      return;
    }
  }

  std::string read_braced() {
    skip_space();
    if (peek() != '{') fail("expected '{'");
    int depth = 0;
    std::size_t start = p_;
    for (; !at_end(); ++p_) {
      if (s_[p_] == '{') ++depth;
      if (s_[p_] == '}' && --depth == 0) {
        ++p_;
        return std::string(s_.substr(start + 1, p_ - start - 2));
      }
    }
    fail("unbalanced braces");
  }

  // A subscript or superscript argument: braced group or a single character.
  std::string read_script() {
    skip_space();
    if (peek() == '{') return read_braced();
    if (at_end()) fail("missing script");
    return std::string(1, s_[p_++]);
  }

  int read_int_script() {
    std::string t = read_script();
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail("expected an integer exponent, got '" + t + "'");
    }
  }

  int optional_power() {
    skip_space();
    if (peek() != '^') return 1;
    ++p_;
    return read_int_script();
  }

  bool at_sum_end() {
    skip();
    if (at_end()) return true;
    char c = peek();
    if (c == ')' || c == ']' || c == '}' || c == '=' || c == '+' || c == '-') return true;
    if (starts("\\right") || starts("\\Bigg]") || starts("\\Bigg)") || starts("\\bigg]") || starts("\\bigg)") ||
        starts("\\big]") || starts("\\big)") || starts("\\Big]") || starts("\\Big)"))
      return true;
    return false;
  }

  TermSum parse_sum() {
    TermSum out;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++p_;
      } else if (!first) {
        break;
      }
      TermSum t = parse_product();
      for (auto& [ym, c] : t) add(out, ym, sign < 0 ? -c : c);
      first = false;
      skip();
      if (peek() != '+' && peek() != '-') break;
    }
    return out;
  }

  static void add(TermSum& s, const YMonomial& ym, const Coefficient& c) {
    auto it = s.find(ym);
    if (it == s.end()) {
      if (!c.is_zero()) s.emplace(ym, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }

  static TermSum unit_sum() { return TermSum{{YMonomial(), Coefficient::one()}}; }

  static TermSum multiply(const TermSum& a, const TermSum& b) {
    TermSum out;
    for (const auto& [ya, ca] : a)
      for (const auto& [yb, cb] : b) add(out, ya * yb, ca * cb);
    return out;
  }

  TermSum invert(const TermSum& a) {
    if (a.size() == 1) return TermSum{{a.begin()->first.inverse(), a.begin()->second.inverse()}};
    // A sum of scalars inverts as a coefficient.
    Coefficient c;
    for (const auto& [ym, k] : a) {
      if (!ym.is_unit()) fail("cannot divide by a sum of Y-monomials");
      c += k;
    }
    return TermSum{{YMonomial(), c.inverse()}};
  }

  TermSum power(const TermSum& a, int e) {
    if (e < 0) return power(invert(a), -e);
    TermSum out = unit_sum();
    for (int k = 0; k < e; ++k) out = multiply(out, a);
    return out;
  }

  TermSum parse_product() {
    TermSum acc = unit_sum();
    bool any = false;
    while (!at_sum_end()) {
      acc = multiply(acc, parse_factor());
      any = true;
    }
    if (!any) fail("empty term");
    return acc;
  }

  // Opening delimiter of a group and its closing partner.
  bool open_group(std::string& close) {
    skip_space();
    static const std::pair<std::string_view, std::string_view> kinds[] = {
        {"\\qty(", ")"}, {"\\qty[", "]"}, {"\\qty{", "}"}, {"\\left(", "\\right)"}, {"\\left[", "\\right]"},
        {"\\Bigg(", "\\Bigg)"}, {"\\Bigg[", "\\Bigg]"}, {"\\bigg(", "\\bigg)"}, {"\\bigg[", "\\bigg]"},
        {"\\Big(", "\\Big)"}, {"\\Big[", "\\Big]"}, {"\\big(", "\\big)"}, {"\\big[", "\\big]"},
        {"(", ")"}, {"[", "]"}};
    for (const auto& [o, c] : kinds) {
      if (starts(o)) {
        p_ += o.size();
        close = c;
        return true;
      }
    }
    return false;
  }

  void expect_close(const std::string& close) {
    skip();
    if (!starts(close)) fail("expected '" + close + "'");
    p_ += close.size();
  }

  TermSum parse_factor() {
    skip();
    std::string close;
    if (open_group(close)) {
      TermSum g = parse_sum();
      expect_close(close);
      return power(g, optional_power());
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = p_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++p_;
      Integer v(std::string(s_.substr(start, p_ - start)));
      return power(TermSum{{YMonomial(), Coefficient::constant(Rational(v))}}, optional_power());
    }
    if (starts("\\frac")) {
      p_ += 5;
      std::string a = read_braced();
      std::string b = read_braced();
      TermSum num = Parser(a, n_).parse_sum_all();
      TermSum den = Parser(b, n_).parse_sum_all();
      return power(multiply(num, invert(den)), optional_power());
    }
    if (starts("\\mathsf{Y}")) {
      p_ += 10;
      skip_space();
      if (peek() != '_') fail("Y needs a subscript");
      ++p_;
      YKey k = parse_ykey(read_script());
      return TermSum{{YMonomial(k, optional_power()), Coefficient::one()}};
    }
    if (starts("\\mathscr{S}")) {
      p_ += 11;
      int r = 1;
      skip_space();
      if (peek() == '_') {
        ++p_;
        r = read_int_script();
      }
      skip_space();
      std::string close2;
      if (!open_group(close2)) fail("S needs a parenthesized argument");
      std::size_t start = p_;
      const char open = close2.back() == ')' ? '(' : '[';
      int depth = 0;
      for (; !at_end(); ++p_) {
        char c = s_[p_];
        if (c == open) ++depth;
        if (c == close2.back() && depth > 0) {
          --depth;
          continue;
        }
        if (depth == 0 && starts(close2)) break;
      }
      std::string arg(s_.substr(start, p_ - start));
      expect_close(close2);
      Monomial z = Parser(arg, n_).parse_monomial_only();
      return power(TermSum{{YMonomial(), s_function_r(z, r)}}, optional_power());
    }
    // Bare symbols act as scalar monomials.
    Monomial m = parse_symbol();
    return TermSum{{YMonomial(), Coefficient::monomial(m)}};
  }

  TermSum parse_sum_all() {
    std::vector<TermSum> sides = parse_sides();
    if (sides.size() != 1) fail("unexpected '=' inside a group");
    return sides.front();
  }

  YKey parse_ykey(const std::string& sub) {
    std::size_t semi = sub.find(';');
    std::size_t comma = sub.find(',');
    std::string node = n_.default_node;
    std::string rest = sub;
    if (comma != std::string::npos && (semi == std::string::npos || comma < semi)) {
      node = sub.substr(0, comma);
      node.erase(std::remove_if(node.begin(), node.end(), ::isspace), node.end());
      rest = sub.substr(comma + 1);
    }
    if (node.empty()) fail("Y-factor without node label in '" + sub + "'");
    Monomial shift;
    semi = rest.find(';');
    if (semi != std::string::npos) {
      std::string js = rest.substr(semi + 1);
      rest = rest.substr(0, semi);
      auto c = js.find(',');
      if (c == std::string::npos) fail("shorthand needs ';j,k' in '" + sub + "'");
      try {
        std::size_t u1 = 0, u2 = 0;
        std::string a = js.substr(0, c), b = js.substr(c + 1);
        int j = std::stoi(a, &u1), k = std::stoi(b, &u2);
        auto trailing = [](const std::string& s, std::size_t u) {
          return std::any_of(s.begin() + static_cast<long>(u), s.end(), [](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); });
        };
        if (trailing(a, u1) || trailing(b, u2)) throw std::invalid_argument(js);
        shift = Monomial::q1(j) * Monomial::q2(k);
      } catch (const std::exception&) {
        fail("bad shorthand shift in '" + sub + "'");
      }
    }
    Monomial base = Parser(rest, n_).parse_monomial_only();
    return YKey{node, base * shift};
  }

  // Product of symbols with optional '/' (everything after it is the denominator).
  Monomial parse_monomial_expr() {
    Monomial num, den;
    bool in_den = false;
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '/') {
        if (in_den) fail("second '/' in monomial");
        in_den = true;
        ++p_;
        continue;
      }
      if (peek() == '1' && (p_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_ + 1])))) {
        ++p_;
        continue;
      }
      Monomial f;
      if (starts("\\frac")) {
        p_ += 5;
        Monomial a = Parser(read_braced(), n_).parse_monomial_only();
        Monomial b = Parser(read_braced(), n_).parse_monomial_only();
        f = a / b;
      } else if (peek() == '(' || starts("\\qty(")) {
        p_ += peek() == '(' ? 1 : 5;
        std::size_t start = p_;
        int depth = 1;
        for (; !at_end(); ++p_) {
          if (s_[p_] == '(') ++depth;
          if (s_[p_] == ')' && --depth == 0) break;
        }
        if (at_end()) fail("unbalanced parentheses in monomial");
        f = Parser(s_.substr(start, p_ - start), n_).parse_monomial_only();
        ++p_;
        f = f.pow(optional_power());
      } else {
        std::size_t before = p_;
        f = parse_symbol();
        if (p_ == before) fail("unexpected character in monomial");
      }
      (in_den ? den : num) *= f;
    }
    return num / den;
  }

  Monomial parse_symbol() {
    skip_space();
    Monomial m;
    if (starts("\\mu")) {
      p_ += 3;
      m = Monomial::mu();
    } else if (starts("\\mathfrak{q}")) {
      p_ += 12;
      skip_space();
      if (peek() == '_') {
        ++p_;
        m = Monomial(Generator::qfrak(read_script()));
      } else {
        m = Monomial(Generator::qfrak());
      }
    } else if (peek() == 'q') {
      ++p_;
      skip_space();
      if (peek() == '_') {
        ++p_;
        std::string sub = read_script();
        if (sub == "1") m = Monomial::q1();
        else if (sub == "2") m = Monomial::q2();
        else if (sub == "3") m = Monomial::q3();
        else if (sub == "4") m = Monomial::q4();
        else fail("unknown symbol q_" + sub);
      } else {
        m = Monomial::q();
      }
    } else if (peek() == 'x') {
      ++p_;
      std::string name = "x";
      if (peek() == '_') {
        ++p_;
        std::string sub = read_script();
        name += sub.size() == 1 ? "_" + sub : "_{" + sub + "}";
      }
      Generator g;
      try {
        g = n_.generator_of(name);
      } catch (const ValidationError& e) {
        fail(e.what());
      }
      m = Monomial(g);
    } else {
      fail("unexpected symbol");
    }
    return m.pow(optional_power());
  }
};

}  // namespace

std::vector<TermSum> parse_latex(std::string_view text, const LatexNames& n) { return Parser(text, n).parse_sides(); }

Monomial parse_latex_monomial(std::string_view text, const LatexNames& n) {
  return Parser(text, n).parse_monomial_only();
}

Character to_character(const TermSum& s) {
  Character ch;
  for (const auto& [ym, c] : s) ch.terms.push_back({ym, c, 0, 0});
  return ch;
}

ClassicalCharacter to_classical(const TermSum& s) {
  std::vector<ClassicalTerm> out;
  for (const auto& [ym, c] : s) {
    auto v = c.constant_value();
    if (!v || v->get_den() != 1) throw NonIntegerLimit("coefficient of " + ym.to_string() + " is not an integer");
    out.push_back({ym, v->get_num()});
  }
  return ClassicalCharacter::from_terms(std::move(out));
}

// ---------------------------------------------------------------- dot and text

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_id(const YMonomial& ym) {
  std::ostringstream os;
  os << "m" << std::hex << ym.hash();
  return os.str();
}

}  // namespace

std::string hasse_dot(const Character& ch, const LatexNames& n) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=TB;\n  node [shape=box];\n";
  for (const auto& t : ch.terms)
    os << "  " << node_id(t.ym) << " [label=\"" << dot_escape(t.ym.to_string()) << "\", tooltip=\""
       << dot_escape(ymonomial_latex(t.ym, n)) << "\", rank=" << t.depth << "];\n";
  for (const auto& e : ch.edges)
    os << "  " << node_id(ch.terms[e.from].ym) << " -> " << node_id(ch.terms[e.to].ym) << " [label=\""
       << dot_escape(e.label.node + "," + e.label.arg.to_string()) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_text(const Character& ch) {
  std::string out;
  for (const auto& t : ch.terms)
    out += "[" + std::to_string(t.depth) + "] " + t.coeff.to_string() + " * " + t.ym.to_string() + "\n";
  return out;
}

std::string to_text(const ClassicalCharacter& ch) {
  std::string out;
  for (const auto& t : ch.terms) out += t.coeff.get_str() + " * " + t.ym.to_string() + "\n";
  return out;
}

}  // namespace qq

#include "logsplit/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "logsplit/errors.hpp"

namespace logsplit {

namespace {

// Possibly inhomogeneous polynomial used only while parsing; homogeneity is
// checked once at the end.
struct GPoly {
  std::map<Mono, Rat, std::greater<Mono>> terms;
};

GPoly g_const(const Rat& c) {
  GPoly p;
  if (c != 0) p.terms[{0, 0, 0}] = c;
  return p;
}

GPoly g_var(int v) {
  GPoly p;
  Mono m{0, 0, 0};
  m[v] = 1;
  p.terms[m] = rat(1);
  return p;
}

GPoly g_add(const GPoly& a, const GPoly& b, int sign) {
  GPoly out = a;
  for (const auto& [m, c] : b.terms) {
    auto it = out.terms.find(m);
    Rat v = (it == out.terms.end() ? Rat(0) : it->second) + (sign > 0 ? c : -c);
    if (v == 0)
      out.terms.erase(m);
    else
      out.terms[m] = v;
  }
  return out;
}

GPoly g_mul(const GPoly& a, const GPoly& b) {
  GPoly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        out.terms.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

GPoly g_neg(const GPoly& a) {
  GPoly out;
  for (const auto& [m, c] : a.terms) out.terms[m] = -c;
  return out;
}

GPoly g_pow(const GPoly& a, long e) {
  GPoly out = g_const(rat(1));
  for (long i = 0; i < e; ++i) out = g_mul(out, a);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  GPoly run() {
    GPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // '-' or the UTF-8 minus sign U+2212; returns consumed length or 0.
  size_t minus_len() const {
    if (pos_ < s_.size() && s_[pos_] == '-') return 1;
    if (pos_ + 3 <= s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xE2 &&
        static_cast<unsigned char>(s_[pos_ + 1]) == 0x88 &&
        static_cast<unsigned char>(s_[pos_ + 2]) == 0x92)
      return 3;
    return 0;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_minus() {
    skip_ws();
    size_t n = minus_len();
    pos_ += n;
    return n > 0;
  }

  GPoly expr() {
    GPoly p = term();
    for (;;) {
      if (eat('+')) {
        p = g_add(p, term(), +1);
      } else if (eat_minus()) {
        p = g_add(p, term(), -1);
      } else {
        return p;
      }
    }
  }

  GPoly term() {
    GPoly p = unary();
    while (eat('*')) p = g_mul(p, unary());
    return p;
  }

  GPoly unary() {
    if (eat_minus()) return g_neg(unary());
    return power();
  }

  GPoly power() {
    GPoly base = atom();
    skip_ws();
    if (!eat('^')) return base;
    skip_ws();
    long e = read_uint("exponent");
    if (e > 512) fail("exponent too large");
    return g_pow(base, e);
  }

  GPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      GPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return g_var(c == 'x' ? 0 : c == 'y' ? 1 : 2);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return g_const(rational_literal());
    fail(std::string("unexpected character '") + c + "'");
  }

  long read_uint(const char* what) {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail(std::string("expected ") + what);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 100000000) fail(std::string(what) + " too large");
      ++pos_;
    }
    return v;
  }

  std::string digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  // "p" or "p/q"; the sign is handled by unary minus.
  Rat rational_literal() {
    std::string num = digits();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::string den = digits();
      if (den.empty()) fail("expected denominator");
      if (Int(den) == 0) fail("zero denominator");
      return rat(Int(num), Int(den));
    }
    return rat(Int(num), Int(1));
  }
};

}  // namespace

HomPoly parse_poly(const std::string& text) {
  Parser parser(text);
  GPoly p = parser.run();
  if (p.terms.empty()) throw ParseError("polynomial is zero");
  int deg = -1;
  for (const auto& [m, c] : p.terms) {
    int d = m[0] + m[1] + m[2];
    if (deg < 0) deg = d;
    if (d != deg)
      throw ParseError("polynomial is not homogeneous: has terms of degree " +
                       std::to_string(deg) + " and " + std::to_string(d));
  }
  HomPoly f;
  f.deg = deg;
  f.terms = std::move(p.terms);
  return f;
}

std::vector<LinForm> parse_arrangement(const std::string& text) {
  std::vector<LinForm> lines;
  std::istringstream in(text);
  std::string row;
  int lineno = 0;
  while (std::getline(in, row)) {
    ++lineno;
    if (auto hash = row.find('#'); hash != std::string::npos) row.erase(hash);
    std::istringstream fields(row);
    std::string a, b, c, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b >> c))
      throw ParseError("row " + std::to_string(lineno) + ": expected three rationals");
    if (fields >> extra)
      throw ParseError("row " + std::to_string(lineno) + ": expected exactly three fields");
    LinForm l;
    try {
      l = LinForm{rat_from_string(a), rat_from_string(b), rat_from_string(c)};
    } catch (const std::invalid_argument& e) {
      throw ParseError("row " + std::to_string(lineno) + ": " + e.what());
    }
    if (l.is_zero()) throw ParseError("row " + std::to_string(lineno) + ": zero form");
    lines.push_back(l);
  }
  if (lines.empty()) throw ParseError("arrangement is empty");
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i].same_line(lines[j]))
        throw ParseError("rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " define the same line");
  return lines;
}

}  // namespace logsplit

#include "hsx/textio.hpp"

#include <cctype>
#include <json.hpp>

namespace hsx {

ParseError::ParseError(const std::string& msg, SourceSpan s)
    : std::runtime_error(msg + " at " + std::to_string(s.start) + ".." + std::to_string(s.end)),
      span(s) {}

ParseError::ParseError(const std::string& msg) : std::runtime_error(msg) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view t) : text_(t) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts(std::string_view s) {
    skip();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!starts(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t from = std::string::npos) const {
    std::size_t start = from == std::string::npos ? pos_ : from;
    std::size_t end = std::min(text_.size(), std::max(start + 1, pos_));
    throw ParseError(msg, SourceSpan{start, end});
  }
  std::size_t pos() const { return pos_; }
  std::string_view text() const { return text_; }

  std::uint64_t natural() {
    skip();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("integer too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return v;
  }

  Rational rational() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t d0 = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      den = std::string(text_.substr(d0, pos_ - d0));
    }
    mpz_class n(num), d(den);
    if (d == 0) fail("division by zero", start);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '-'))
      ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Ordinal ordinal_sum(Cursor& c);

Ordinal ordinal_term(Cursor& c) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) return Ordinal::nat(c.natural());
  if (ch != 'w') c.fail("expected an ordinal term");
  c.expect("w");
  Ordinal exponent = Ordinal::nat(1);
  if (c.accept("^")) {
    if (c.accept("(")) {
      exponent = ordinal_sum(c);
      c.expect(")");
    } else {
      exponent = Ordinal::nat(c.natural());
    }
  }
  std::uint64_t coeff = 1;
  // '*' followed by a digit is the coefficient; a following factor is not ours.
  if (c.starts("*")) {
    Cursor probe = c;
    probe.expect("*");
    if (std::isdigit(static_cast<unsigned char>(probe.peek()))) {
      c.expect("*");
      coeff = c.natural();
      if (coeff == 0) c.fail("zero ordinal coefficient");
    }
  }
  return Ordinal::omega_pow(exponent, coeff);
}

Ordinal ordinal_sum(Cursor& c) {
  Ordinal acc = ordinal_term(c);
  while (c.accept("+")) acc = ord_sum(acc, ordinal_term(c));
  return acc;
}

class NumberParser {
 public:
  explicit NumberParser(std::string_view t) : c_(t) {}

  NumberExpr run() {
    NumberExpr r = sum();
    if (!c_.done()) c_.fail("unexpected input");
    return r;
  }

 private:
  NumberExpr sum() {
    bool negate = false;
    if (c_.accept("-")) negate = true;
    else c_.accept("+");
    NumberExpr acc = product();
    if (negate) acc = neg(acc);
    for (;;) {
      if (c_.accept("+")) acc = add(acc, product());
      else if (c_.accept("-")) acc = sub(acc, product());
      else break;
    }
    return acc;
  }

  NumberExpr product() {
    NumberExpr acc = power();
    while (c_.accept("*")) acc = mul(acc, power());
    return acc;
  }

  NumberExpr power() {
    std::size_t start = c_.pos();
    NumberExpr base = factor();
    if (!c_.accept("^")) return base;
    if (c_.accept("(")) {
      bool negative = c_.accept("-");
      Rational q = c_.rational();
      if (negative) q = -q;
      c_.expect(")");
      if (q == 1) return base;
      if (q == -1) return number_pow(base, -1);
      return number_exp(scale(number_log(base), q));
    }
    bool negative = c_.accept("-");
    std::uint64_t n = c_.natural();
    if (n != 1)
      c_.fail("powers are limited to +1 and -1; use x^(p/q) for other exponents", start);
    return number_pow(base, negative ? -1 : 1);
  }

  NumberExpr factor() {
    std::size_t start = c_.pos();
    char ch = c_.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return NumberExpr::constant(c_.rational());
    if (c_.accept("(")) {
      NumberExpr e = sum();
      c_.expect(")");
      return e;
    }
    if (c_.accept("exp(")) {
      NumberExpr e = sum();
      c_.expect(")");
      return number_exp(e);
    }
    if (c_.accept("log(")) {
      NumberExpr e = sum();
      c_.expect(")");
      return number_log(e);
    }
    if (c_.accept("L[")) {
      Ordinal g = ordinal_sum(c_);
      c_.expect("](");
      NumberExpr e = sum();
      c_.expect(")");
      return hyperlog(g, e);
    }
    if (c_.accept("E[")) {
      Ordinal g = ordinal_sum(c_);
      c_.expect("](");
      NumberExpr e = sum();
      c_.expect(")");
      if (g == Ordinal::nat(1)) return number_exp(e);
      return NumberExpr::of(hyperexp(g, e));
    }
    if (c_.accept("N{")) {
      std::size_t id_start = c_.pos();
      std::string id = c_.identifier();
      if (!find_sequence(id)) c_.fail("unknown nested sequence '" + id + "'", id_start);
      std::uint64_t level = 0;
      if (c_.accept("@")) level = c_.natural();
      NumberExpr rank;
      if (c_.accept(";")) rank = sum();
      c_.expect("}");
      return NumberExpr::of(Monomial::raw_nested(id, level, rank));
    }
    if (ch == 'w') {
      c_.expect("w");
      std::size_t p = c_.pos();
      if (p < c_.text().size() && ident_char(c_.text()[p])) c_.fail("unknown identifier", start);
      return NumberExpr::omega();
    }
    c_.fail("expected a factor");
  }

  Cursor c_;
};

std::string coeff_prefix(const Rational& c, const Monomial& m) {
  if (m.is_one()) return c.get_str();
  if (c == 1) return "";
  return c.get_str() + "*";
}

std::string print_tail(const Monomial& m) {
  std::string core;
  if (m.kind() == TailKind::Omega) {
    core = "w";
  } else {
    core = "E[" + m.alpha().to_string() + "](" + print_number(m.u()) + ")";
  }
  if (!m.beta().is_zero()) core = "L[" + m.beta().to_string() + "](" + core + ")";
  return core;
}

class LogParser {
 public:
  explicit LogParser(std::string_view t) : c_(t) {}
  LogSeries run() {
    LogSeries r = sum();
    if (!c_.done()) c_.fail("unexpected input");
    return r;
  }

 private:
  LogSeries sum() {
    bool negate = c_.accept("-");
    if (!negate) c_.accept("+");
    LogSeries acc = product();
    if (negate) acc = acc.scaled(Rational(-1));
    for (;;) {
      if (c_.accept("+")) acc = acc + product();
      else if (c_.accept("-")) acc = acc - product();
      else break;
    }
    return acc;
  }
  LogSeries product() {
    LogSeries acc = factor();
    while (c_.accept("*")) acc = acc * factor();
    return acc;
  }
  Rational exponent() {
    if (c_.accept("(")) {
      bool negative = c_.accept("-");
      Rational q = c_.rational();
      c_.expect(")");
      return negative ? Rational(-q) : q;
    }
    bool negative = c_.accept("-");
    Rational q(static_cast<unsigned long>(c_.natural()));
    return negative ? Rational(-q) : q;
  }
  LogSeries factor() {
    char ch = c_.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return LogSeries::constant(c_.rational());
    if (c_.accept("(")) {
      LogSeries e = sum();
      c_.expect(")");
      return e;
    }
    if (c_.accept("linv[")) {
      Ordinal g = ordinal_sum(c_);
      c_.expect("]");
      LogMonomial m = LogMonomial::inv_prefix(g);
      if (c_.accept("^")) {
        Rational e = exponent();
        if (!is_integer(e)) c_.fail("inverse-prefix powers must be integers");
        m = m.pow(e.get_num().get_si());
      }
      return LogSeries::term(Rational(1), m);
    }
    if (c_.accept("l[")) {
      Ordinal g = ordinal_sum(c_);
      c_.expect("]");
      Rational e(1);
      if (c_.accept("^")) e = exponent();
      return LogSeries::term(Rational(1), LogMonomial::ell(g, e));
    }
    c_.fail("expected a logarithmic factor");
  }
  Cursor c_;
};

std::string exponent_text(const Rational& e) {
  if (e == 1) return "";
  if (is_integer(e)) return "^" + e.get_str();
  if (e < 0) return "^(-" + Rational(-e).get_str() + ")";
  return "^(" + e.get_str() + ")";
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  Cursor c(text);
  Ordinal o = ordinal_sum(c);
  if (!c.done()) c.fail("unexpected input after ordinal");
  return o;
}

NumberExpr parse_number(std::string_view text) { return NumberParser(text).run(); }

std::string print_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  if (m.is_nested()) {
    std::string s = "N{" + m.seq();
    if (m.level() != 0) s += "@" + std::to_string(m.level());
    if (!m.rank().is_zero()) s += ";" + print_number(m.rank());
    return s + "}";
  }
  std::string out;
  if (!m.psi().is_zero()) out = "exp(" + print_number(m.psi()) + ")*";
  out += print_tail(m);
  if (m.iota() == -1) out += "^-1";
  return out;
}

std::string print_number(const NumberExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      if (c < 0) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
    }
    first = false;
    out += coeff_prefix(c, t.mono);
    if (!t.mono.is_one()) out += print_monomial(t.mono);
  }
  return out;
}

LogSeries parse_log_series(std::string_view text) { return LogParser(text).run(); }

std::string print_log_monomial(const LogMonomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [g, e] : m.powers()) {
    if (!out.empty()) out += "*";
    out += "l[" + g.to_string() + "]" + exponent_text(e);
  }
  for (const auto& [p, k] : m.prefixes()) {
    if (!out.empty()) out += "*";
    out += "linv[" + p.to_string() + "]" + exponent_text(Rational(k));
  }
  return out;
}

std::string print_log_series(const LogSeries& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    if (c < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += print_log_monomial(t.mono);
    }
  }
  return out;
}

CodingSequence parse_coding(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), SourceSpan{e.byte, e.byte});
  }
  auto field_error = [](const std::string& field, const std::string& msg) -> ParseError {
    return ParseError("field '" + field + "': " + msg);
  };
  if (!j.is_object()) throw field_error("<root>", "expected an object");
  std::string name = "S";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw field_error("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  if (!j.contains("levels") || !j["levels"].is_array() || j["levels"].empty())
    throw field_error("levels", "expected a non-empty array");
  std::vector<CodingLevel> levels;
  std::size_t idx = 0;
  for (const auto& lv : j["levels"]) {
    std::string where = "levels[" + std::to_string(idx++) + "]";
    if (!lv.is_object()) throw field_error(where, "expected an object");
    auto text_of = [&](const char* key, const char* dflt) {
      if (!lv.contains(key)) return std::string(dflt);
      if (!lv[key].is_string()) throw field_error(where + "." + key, "expected a string");
      return lv[key].get<std::string>();
    };
    auto sign_of = [&](const char* key) {
      if (!lv.contains(key)) return 1;
      if (!lv[key].is_number_integer() || (lv[key] != 1 && lv[key] != -1))
        throw field_error(where + "." + key, "expected 1 or -1");
      return lv[key].get<int>();
    };
    CodingLevel L;
    try {
      L.phi = parse_number(text_of("phi", "0"));
      L.psi = parse_number(text_of("psi", "0"));
      L.alpha = parse_ordinal(text_of("alpha", "1"));
    } catch (const ParseError& e) {
      throw field_error(where, e.what());
    }
    L.eps = sign_of("eps");
    L.iota = sign_of("iota");
    if (!L.alpha.is_power_of_omega()) throw field_error(where + ".alpha", "expected a power of w");
    levels.push_back(std::move(L));
  }
  std::optional<std::size_t> period;
  if (j.contains("period") && !j["period"].is_null()) {
    const auto& p = j["period"];
    if (!p.is_number_integer() || p.get<long long>() < 0 ||
        static_cast<std::size_t>(p.get<long long>()) >= levels.size())
      throw field_error("period", "expected a level index below " + std::to_string(levels.size()));
    period = static_cast<std::size_t>(p.get<long long>());
  }
  Ordinal shift;
  if (j.contains("shift")) {
    if (!j["shift"].is_string()) throw field_error("shift", "expected an ordinal string");
    try {
      shift = parse_ordinal(j["shift"].get<std::string>());
    } catch (const ParseError& e) {
      throw field_error("shift", e.what());
    }
  }
  return CodingSequence(name, std::move(levels), period, shift);
}

std::string print_coding(const CodingSequence& s) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = s.name();
  ordered_json levels = ordered_json::array();
  for (const auto& L : s.listed()) {
    ordered_json o;
    o["phi"] = print_number(L.phi);
    o["eps"] = L.eps;
    o["psi"] = print_number(L.psi);
    o["iota"] = L.iota;
    o["alpha"] = L.alpha.to_string();
    levels.push_back(o);
  }
  j["levels"] = levels;
  if (s.period()) j["period"] = *s.period();
  if (!s.shift().is_zero()) j["shift"] = s.shift().to_string();
  return j.dump(2);
}

}  // namespace hsx

#include "ffda/textio.hpp"

#include <algorithm>
#include <cctype>

namespace ffda {

namespace {

// Character cursor that skips whitespace and tracks source positions.
struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

  i64 integer() {
    skip_ws();
    std::size_t start = i;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      negative = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an integer", start);
    i64 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > (1ll << 40)) throw ParseError("integer too large", start);
      ++i;
    }
    return negative ? -v : v;
  }
};

// One term: `c`, `T`, `T^k`, or `c*T^k`; returns (coefficient, power).
std::pair<i64, int> parse_term(Cursor& cur) {
  i64 coeff = 1;
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    coeff = cur.integer();
    saw_coeff = true;
    if (!cur.eat('*')) return {coeff, 0};
  }
  if (cur.peek() == 'T') {
    cur.eat('T');
    if (cur.eat('^')) {
      i64 k = cur.integer();
      if (k < 0) cur.fail("negative power in a polynomial");
      return {coeff, static_cast<int>(k)};
    }
    return {coeff, 1};
  }
  if (saw_coeff) cur.fail("expected T after '*'");
  cur.fail("expected a coefficient or T");
}

Poly parse_poly_at(const FieldConfig& field, Cursor& cur,
                   const std::string& stop_chars) {
  std::vector<std::pair<i64, int>> terms;
  int sign = 1;
  if (cur.eat('-')) sign = -1;
  else cur.eat('+');
  while (true) {
    auto [c, k] = parse_term(cur);
    terms.emplace_back(sign * c, k);
    cur.skip_ws();
    if (cur.done()) break;
    char nxt = cur.peek();
    if (stop_chars.find(nxt) != std::string::npos) break;
    if (cur.eat('+')) sign = 1;
    else if (cur.eat('-')) sign = -1;
    else cur.fail("expected '+', '-' or end of polynomial");
  }
  int max_k = 0;
  for (auto& [c, k] : terms) max_k = std::max(max_k, k);
  std::vector<u32> coeffs(static_cast<std::size_t>(max_k) + 1, 0);
  for (auto& [c, k] : terms)
    coeffs[static_cast<std::size_t>(k)] =
        field.add(coeffs[static_cast<std::size_t>(k)], field.reduce(c));
  return Poly(field, std::move(coeffs));
}

}  // namespace

Poly parse_poly(const FieldConfig& field, const std::string& text) {
  Cursor cur{text};
  Poly p = parse_poly_at(field, cur, "");
  if (!cur.done()) cur.fail("trailing input after polynomial");
  return p;
}

namespace {

bool has_prefix(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

std::pair<std::string, int> split_at_prec(const std::string& body,
                                          std::size_t offset) {
  auto at = body.rfind('@');
  if (at == std::string::npos)
    throw ParseError("missing '@<prec>' suffix", offset + body.size());
  Cursor cur{body};
  cur.i = at + 1;
  i64 prec = cur.integer();
  if (!cur.done()) cur.fail("trailing input after precision");
  return {body.substr(0, at), static_cast<int>(prec)};
}

}  // namespace

LaurentSeries parse_series_spec(const FieldConfig& field,
                                const std::string& text) {
  if (has_prefix(text, "rat:")) {
    auto [body, prec] = split_at_prec(text.substr(4), 4);
    auto slash = body.find('/');
    if (slash == std::string::npos)
      throw ParseError("expected <num>/<den>", 4 + body.size());
    Poly num = parse_poly(field, body.substr(0, slash));
    Poly den = parse_poly(field, body.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator", 4 + slash + 1);
    return LaurentSeries::from_rational(RationalFn(num, den), prec);
  }
  if (has_prefix(text, "ser:")) {
    auto [body, prec] = split_at_prec(text.substr(4), 4);
    auto colon = body.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected <exp0>:<coeffs>", 4 + body.size());
    Cursor head{body};
    i64 lead = head.integer();
    std::vector<u32> coeffs;
    Cursor cur{body};
    cur.i = colon + 1;
    while (!cur.done()) {
      coeffs.push_back(field.reduce(cur.integer()));
      if (!cur.eat(',')) break;
    }
    if (!cur.done()) cur.fail("trailing input in coefficient list");
    return LaurentSeries::from_terms(field, static_cast<int>(lead),
                                     std::move(coeffs), prec);
  }
  throw ParseError("expected 'rat:' or 'ser:' prefix", 0);
}

QuadraticSurd parse_surd_spec(const FieldConfig& field,
                              const std::string& text) {
  if (!has_prefix(text, "surd:")) throw ParseError("expected 'surd:' prefix", 0);
  auto open = text.find('(', 5);
  if (open == std::string::npos) throw ParseError("expected '('", 5);
  auto sq = text.find("sqrt", open);
  if (sq == std::string::npos) throw ParseError("expected 'sqrt'", open);

  // Walk back over the optional `s*` spelling and whitespace to the sign.
  std::size_t j = sq;
  auto back_ws = [&] {
    while (j > open + 1 &&
           std::isspace(static_cast<unsigned char>(text[j - 1])))
      --j;
  };
  back_ws();
  if (j >= 2 && text[j - 2] == 's' && text[j - 1] == '*') j -= 2;
  back_ws();
  if (j <= open + 1 || (text[j - 1] != '+' && text[j - 1] != '-'))
    throw ParseError("expected '+' or '-' before sqrt", j);
  int sign = text[j - 1] == '+' ? +1 : -1;
  Poly P = parse_poly(field, text.substr(open + 1, j - 1 - (open + 1)));

  std::size_t dpos = sq + 4;
  if (dpos >= text.size() || text[dpos] != '(')
    throw ParseError("expected '(' after sqrt", dpos);
  auto dclose = text.find(')', dpos + 1);
  if (dclose == std::string::npos)
    throw ParseError("expected ')' closing sqrt", text.size());
  Poly D = parse_poly(field, text.substr(dpos + 1, dclose - dpos - 1));

  Cursor cur{text};
  cur.i = dclose + 1;
  if (!cur.eat(')')) cur.fail("expected ')' closing the numerator");
  if (!cur.eat('/')) cur.fail("expected '/<Q>'");
  Poly Q = parse_poly_at(field, cur, "");
  if (!cur.done()) cur.fail("trailing input after surd");
  return QuadraticSurd(P, Q, D, sign);
}

LaurentSeries ElementSpec::as_series(int prec) const {
  int want = std::max(prec, declared_prec);
  if (std::holds_alternative<RationalFn>(value))
    return LaurentSeries::from_rational(std::get<RationalFn>(value), want);
  if (std::holds_alternative<QuadraticSurd>(value))
    return surd_to_series(std::get<QuadraticSurd>(value), want);
  const auto& s = std::get<LaurentSeries>(value);
  return s.prec() > want ? s.truncated(want) : s;
}

ElementSpec parse_element_spec(const FieldConfig& field,
                               const std::string& text, int default_prec) {
  if (has_prefix(text, "surd:"))
    return {parse_surd_spec(field, text), text, default_prec};
  if (has_prefix(text, "rat:")) {
    auto [body, prec] = split_at_prec(text.substr(4), 4);
    auto slash = body.find('/');
    if (slash == std::string::npos)
      throw ParseError("expected <num>/<den>", 4 + body.size());
    Poly num = parse_poly(field, body.substr(0, slash));
    Poly den = parse_poly(field, body.substr(slash + 1));
    return {RationalFn(num, den), text, prec};
  }
  if (has_prefix(text, "ser:")) {
    LaurentSeries s = parse_series_spec(field, text);
    int prec = s.prec();
    return {std::move(s), text, prec};
  }
  // Bare polynomial text is accepted as an exact rational.
  Poly p = parse_poly(field, text);
  return {RationalFn::from_poly(p), text, default_prec};
}

json poly_to_json(const Poly& p) { return p.to_string(); }

json series_to_json(const LaurentSeries& s) {
  json out;
  out["p"] = s.field().p();
  out["lead_exp"] = s.is_zero_to_prec() ? json(nullptr) : json(s.lead_exp());
  out["coeffs"] = s.raw_coeffs();
  out["prec"] = s.prec();
  out["spec"] = s.to_string();
  return out;
}

json surd_to_json(const QuadraticSurd& s) {
  json out;
  out["P"] = s.P().to_string();
  out["Q"] = s.Q().to_string();
  out["D"] = s.D().to_string();
  out["sign"] = s.sign();
  out["spec"] = format_surd(s);
  return out;
}

json qexponent_to_json(const QExponent& e) {
  if (e.is_zero()) return json{{"kind", "zero"}};
  return json{{"kind", "finite"}, {"e", e.exponent()}};
}

json exp_rational_to_json(const ExpRational& e) {
  return json{{"num", e.num}, {"den", e.den}};
}

json point_to_json(const IntegralPoint& x) {
  json arr = json::array();
  for (const auto& c : x.coords) arr.push_back(c.to_string());
  return arr;
}

std::string format_surd(const QuadraticSurd& s) {
  std::string out = "surd:(" + s.P().to_string();
  out += s.sign() > 0 ? "+" : "-";
  out += "sqrt(" + s.D().to_string() + "))/" + s.Q().to_string();
  return out;
}

}  // namespace ffda

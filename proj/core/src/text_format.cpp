#include "theta/text_format.hpp"

#include <cctype>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

namespace {

void append_factors(std::ostringstream& os, const Shape& shape, const Monomial& m, char symbol) {
  for (int v = 0; v < shape.variables(); ++v) {
    int e = m[v];
    if (e == 0) continue;
    os << '*' << symbol << '[' << shape.row_of(v) << ',' << shape.col_of(v) << ']';
    if (e > 1) os << '^' << e;
  }
}

void append_signed(std::ostringstream& os, bool first, const Rational& c) {
  if (first) {
    os << (c.sign() < 0 ? (-c).to_string().insert(0, "-") : c.to_string());
  } else {
    os << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? (-c).to_string() : c.to_string());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct ParsedTerm {
  Rational coef;
  Monomial x;
  Monomial d;
};

// Splits "a + b - c" into signed pieces; signs inside brackets never occur.
std::vector<std::pair<bool, std::string_view>> split_terms(std::string_view text) {
  std::vector<std::pair<bool, std::string_view>> out;
  text = trim(text);
  bool negative = false;
  std::size_t start = 0;
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = i = 1;
  }
  int depth = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && i > start) {
      // A sign directly after '^' or '*' or '/' belongs to the factor.
      std::string_view before = trim(text.substr(start, i - start));
      if (!before.empty() && (before.back() == '*' || before.back() == '^' || before.back() == '/'))
        continue;
      if (before.empty()) {  // "a + -b"
        if (c == '-') negative = !negative;
        start = i + 1;
        continue;
      }
      out.emplace_back(negative, before);
      negative = c == '-';
      start = i + 1;
    }
  }
  out.emplace_back(negative, trim(text.substr(start)));
  return out;
}

ParsedTerm parse_term(const Shape& shape, bool negative, std::string_view term, bool allow_d) {
  if (term.empty()) throw ParseError("empty term");
  ParsedTerm out{Rational(negative ? -1 : 1), {}, {}};
  std::size_t pos = 0;
  bool first = true;
  while (pos <= term.size()) {
    std::size_t star = term.find('*', pos);
    std::string_view factor =
        trim(term.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.empty()) throw ParseError("empty factor in '" + std::string(term) + "'");
    if (factor[0] == 'x' || factor[0] == 'd') {
      char symbol = factor[0];
      if (symbol == 'd' && !allow_d) throw ParseError("derivative symbol in a polynomial");
      auto close = factor.find(']');
      auto comma = factor.find(',');
      if (factor.size() < 2 || factor[1] != '[' || close == std::string_view::npos ||
          comma == std::string_view::npos || comma > close)
        throw ParseError("malformed factor '" + std::string(factor) + "'");
      int row = std::stoi(std::string(factor.substr(2, comma - 2)));
      int col = std::stoi(std::string(factor.substr(comma + 1, close - comma - 1)));
      int e = 1;
      std::string_view rest = factor.substr(close + 1);
      if (!rest.empty()) {
        if (rest[0] != '^') throw ParseError("malformed exponent in '" + std::string(factor) + "'");
        e = std::stoi(std::string(rest.substr(1)));
      }
      if (row < 1 || row > shape.n || col < 1 || col > shape.k || e < 0)
        throw ParseError("factor '" + std::string(factor) + "' outside shape");
      (symbol == 'x' ? out.x : out.d).bump(shape.index(row, col), e);
    } else {
      if (!first) throw ParseError("coefficient must lead the term: '" + std::string(term) + "'");
      out.coef = out.coef * Rational::parse(factor);
    }
    first = false;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return out;
}

}  // namespace

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    append_signed(os, first, t.coef);
    append_factors(os, p.shape(), t.mono, 'x');
    first = false;
  }
  return os.str();
}

std::string format_operator(const DiffOperator& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : d.terms()) {
    for (const auto& t : term.coef.terms()) {
      append_signed(os, first, t.coef);
      append_factors(os, d.shape(), t.mono, 'x');
      append_factors(os, d.shape(), term.deriv, 'd');
      first = false;
    }
  }
  return os.str();
}

Polynomial parse_polynomial(Shape shape, std::string_view text) {
  shape.validate();
  text = trim(text);
  if (text == "0") return Polynomial(shape);
  std::vector<Term> terms;
  for (auto [neg, piece] : split_terms(text)) {
    auto t = parse_term(shape, neg, piece, false);
    terms.push_back({t.x, t.coef});
  }
  return Polynomial::from_terms(shape, std::move(terms));
}

DiffOperator parse_operator(Shape shape, std::string_view text) {
  shape.validate();
  text = trim(text);
  if (text == "0") return DiffOperator(shape);
  std::vector<OperatorTerm> terms;
  for (auto [neg, piece] : split_terms(text)) {
    auto t = parse_term(shape, neg, piece, true);
    terms.push_back({Polynomial::monomial(shape, t.x, t.coef), t.d});
  }
  return DiffOperator::from_terms(shape, std::move(terms));
}

}  // namespace theta

#include "gbd/poly_system.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gbd/errors.hpp"

namespace gbd {

PolySystem::PolySystem(std::vector<std::string> var_names, std::vector<Polynomial> polys)
    : var_names_(std::move(var_names)), polys_(std::move(polys)) {
  std::set<std::string_view> seen;
  for (const std::string& name : var_names_) {
    if (!is_valid_identifier(name)) throw InvalidArgument("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw InvalidArgument("duplicate variable name '" + name + "'");
  }
  for (const Polynomial& p : polys_) {
    if (p.dimension() != var_names_.size()) throw DimensionError("polynomial dimension does not match system");
  }
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

// Recursive-descent parser over a single line of input.
class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no, std::span<const std::string> names)
      : line_(line), line_no_(line_no), names_(names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
  }

  Polynomial polynomial() {
    std::vector<Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+', '-' or end of line");
      negative = peek() == '-';
      ++pos_;
    }
    return Polynomial::from_terms(names_.size(), std::move(terms));
  }

  Monomial monomial() {
    skip_space();
    Monomial m(names_.size());
    if (peek() == '1') {
      ++pos_;
      skip_space();
      if (!at_end()) fail("expected end of input after constant monomial");
      return m;
    }
    m = factor_product(std::move(m));
    skip_space();
    if (!at_end()) fail("unexpected character in monomial");
    return m;
  }

 private:
  Term term() {
    skip_space();
    Term t{Rational(1), Monomial(names_.size())};
    if (is_digit(peek())) {
      t.coeff = coefficient();
      skip_space();
      if (peek() != '*') return t;
      ++pos_;
      skip_space();
      if (!is_ident_start(peek())) fail("expected variable after '*'");
    } else if (!is_ident_start(peek())) {
      fail(at_end() ? "unexpected end of line, expected a term" : "expected a coefficient or variable");
    }
    t.mono = factor_product(std::move(t.mono));
    return t;
  }

  Monomial factor_product(Monomial m) {
    std::vector<Exponent> exps(m.exponents().begin(), m.exponents().end());
    while (true) {
      skip_space();
      std::size_t start = pos_;
      if (!is_ident_start(peek())) fail("expected variable");
      while (is_ident_char(peek())) ++pos_;
      std::string_view name = line_.substr(start, pos_ - start);
      auto it = index_.find(std::string(name));
      if (it == index_.end()) fail("unknown variable '" + std::string(name) + "'", start);
      std::uint64_t power = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        power = exponent();
      }
      std::uint64_t total = exps[it->second] + power;
      if (total > std::numeric_limits<Exponent>::max()) fail("exponent overflow", start);
      exps[it->second] = static_cast<Exponent>(total);
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return Monomial(std::move(exps));
  }

  std::uint64_t exponent() {
    std::size_t start = pos_;
    if (!is_digit(peek())) fail("expected a positive integer exponent");
    std::uint64_t value = 0;
    while (is_digit(peek())) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > std::numeric_limits<Exponent>::max()) fail("exponent too large", start);
      ++pos_;
    }
    if (value == 0) fail("exponent must be at least 1", start);
    return value;
  }

  Rational coefficient() {
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      if (!is_digit(peek())) fail("expected denominator");
      while (is_digit(peek())) ++pos_;
    }
    std::string text;
    for (char c : line_.substr(start, pos_ - start)) {
      if (!is_space(c)) text.push_back(c);
    }
    try {
      return parse_rational(text);
    } catch (const InvalidArgument& e) {
      fail(e.what(), start);
    }
  }

  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return at_end() ? '\0' : line_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, line_no_, at + 1);
  }

  std::string_view line_;
  std::size_t line_no_;
  std::span<const std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!is_space(c)) return false;
  }
  return true;
}

std::vector<std::string> parse_vars_line(std::string_view line, std::size_t line_no) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < line.size() && is_space(line[pos])) ++pos;
  };
  skip();
  if (line.substr(pos, 4) != "vars" || (pos + 4 < line.size() && !is_space(line[pos + 4]))) {
    throw ParseError("expected 'vars' header", line_no, pos + 1);
  }
  pos += 4;
  std::vector<std::string> names;
  std::set<std::string> seen;
  while (true) {
    skip();
    if (pos >= line.size()) break;
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) ++pos;
    std::string name(line.substr(start, pos - start));
    if (!is_valid_identifier(name)) throw ParseError("invalid variable name '" + name + "'", line_no, start + 1);
    if (!seen.insert(name).second) throw ParseError("duplicate variable '" + name + "'", line_no, start + 1);
    names.push_back(std::move(name));
  }
  if (names.empty()) throw ParseError("'vars' needs at least one variable", line_no, pos + 1);
  return names;
}

}  // namespace

PolySystem parse_system(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::vector<Polynomial> polys;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (is_blank(line)) continue;
    if (!names) {
      names = parse_vars_line(line, line_no);
    } else {
      polys.push_back(LineParser(line, line_no, *names).polynomial());
    }
  }
  if (!names) throw ParseError("missing 'vars' header", line_no == 0 ? 1 : line_no, 1);
  return PolySystem(std::move(*names), std::move(polys));
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names) {
  return LineParser(strip_comment(text), 1, var_names).polynomial();
}

Monomial parse_monomial(std::string_view text, std::span<const std::string> var_names) {
  return LineParser(text, 1, var_names).monomial();
}

std::string format_monomial(const Monomial& m, std::span<const std::string> var_names) {
  if (m.dimension() != var_names.size()) throw DimensionError("monomial dimension does not match names");
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_term(const Term& t, std::span<const std::string> var_names) {
  if (t.mono.is_constant()) return to_string(t.coeff);
  std::string mono = format_monomial(t.mono, var_names);
  if (t.coeff == 1) return mono;
  if (t.coeff == -1) return "-" + mono;
  return to_string(t.coeff) + "*" + mono;
}

std::string format_polynomial(const Polynomial& p, std::span<const std::string> var_names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const Term& t : p.terms()) {
    std::string piece = format_term(t, var_names);
    if (out.empty()) {
      out = std::move(piece);
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

std::string format_system(const PolySystem& system) {
  std::ostringstream out;
  out << "vars";
  for (const std::string& name : system.var_names()) out << ' ' << name;
  out << '\n';
  for (const Polynomial& p : system.polys()) out << format_polynomial(p, system.var_names()) << '\n';
  return out.str();
}

}  // namespace gbd

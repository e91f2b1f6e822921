#include <cctype>
#include <map>

#include "primegb/corpus.hpp"

namespace primegb {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no, const VarTable& vars)
      : line_(line), line_no_(line_no), vars_(vars) {}

  SparsePolynomial parse() {
    SparsePolynomial terms;
    skip_space();
    terms.push_back(term(/*leading=*/true));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = line_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      terms.push_back(term(/*leading=*/false));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= line_.size(); }

  void skip_space() {
    while (!at_end() && is_space(line_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_no_, pos_ + 1); }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(line_[pos_])) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  // A term may open with any number of signs: the separator of the
  // previous term plus the term's own optional sign.
  SparseTerm term(bool leading) {
    bool negative = false;
    std::size_t signs = 0;
    while (true) {
      skip_space();
      if (at_end() || (line_[pos_] != '+' && line_[pos_] != '-')) break;
      negative ^= line_[pos_] == '-';
      ++pos_;
      ++signs;
    }
    if (signs > (leading ? 1u : 2u)) fail("too many signs");
    skip_space();
    if (at_end()) fail("expected a term");

    SparseTerm t{mpq_class(1), Exponents(vars_.size(), 0)};
    bool seen_any = false;
    if (is_digit(line_[pos_])) {
      mpz_class num(std::string(digits()), 10);
      mpz_class den = 1;
      skip_space();
      if (!at_end() && line_[pos_] == '/') {
        ++pos_;
        skip_space();
        const auto d = digits();
        if (d.empty()) fail("expected denominator");
        den = mpz_class(std::string(d), 10);
        if (den == 0) fail("zero denominator");
      }
      t.coeff = mpq_class(num, den);
      t.coeff.canonicalize();
      seen_any = true;
    }
    while (true) {
      skip_space();
      if (at_end() || !is_letter(line_[pos_])) break;
      const char name = line_[pos_];
      const auto index = vars_.index_of(name);
      if (!index) throw UnknownVariable(name, line_no_, pos_ + 1);
      ++pos_;
      Exponent e = 1;
      skip_space();
      if (!at_end() && line_[pos_] == '^') {
        ++pos_;
        skip_space();
        const auto d = digits();
        if (d.empty()) fail("expected exponent");
        if (d.size() > 9) fail("exponent too large");
        e = static_cast<Exponent>(std::stoul(std::string(d)));
      }
      t.exps[*index] += e;
      seen_any = true;
    }
    if (!seen_any) fail("expected a term");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string_view line_;
  std::size_t line_no_;
  const VarTable& vars_;
  std::size_t pos_ = 0;
};

template <class Fn>
void for_each_content_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = text.substr(start, end - start);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first < line.size() && line[first] != '#') fn(line, line_no);
    start = end + 1;
  }
}

// Merges repeated power products in first-appearance order and drops
// zero coefficients.
SparsePolynomial combine(SparsePolynomial terms) {
  SparsePolynomial out;
  std::map<Exponents, std::size_t> slot;
  for (auto& t : terms) {
    auto [it, fresh] = slot.emplace(t.exps, out.size());
    if (fresh) {
      out.push_back(std::move(t));
    } else {
      out[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(out, [](const SparseTerm& t) { return sgn(t.coeff) == 0; });
  return out;
}

}  // namespace

PolySystem parse_system(std::string_view text, std::string_view declared_order, std::string name) {
  std::string order(declared_order);
  if (order.empty()) {
    for_each_content_line(text, [&](std::string_view line, std::size_t) {
      for (char c : line) {
        if (is_letter(c) && order.find(c) == std::string::npos) order += c;
      }
    });
  }
  PolySystem system{std::move(name), VarTable(order), {}};
  for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
    SparsePolynomial p = combine(LineParser(line, line_no, system.vars).parse());
    if (p.empty()) throw ParseError("polynomial is identically zero", line_no, 1);
    system.polynomials.push_back(std::move(p));
  });
  if (system.polynomials.empty()) throw ParseError("no polynomials", 1, 1);
  return system;
}

}  // namespace primegb

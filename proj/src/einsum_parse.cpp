#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "format.hpp"
#include "tensoralg/einsum.hpp"

namespace tensoralg::einsum {

namespace {

bool is_name_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || u >= 0x80;
}

bool is_name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Statement statement() {
    Statement st;
    const auto eq = text_.find('=');
    if (eq != std::string_view::npos) {
      if (text_.find('=', eq + 1) != std::string_view::npos) {
        fail("more than one '='", text_.find('=', eq + 1));
      }
      skip_space();
      st.target = target();
      skip_space();
      if (peek() != '=') fail("expected '=' after target", pos_);
      ++pos_;
    }
    expression(st);
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return st;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string name() {
    skip_space();
    if (!is_name_start(peek())) fail("expected a tensor name", pos_);
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  IndexSpec index(Variance v) {
    const char c = peek();
    if ((c >= 'a' && c <= 'z') || (c >= '1' && c <= '9')) {
      ++pos_;
      return IndexSpec{c, v};
    }
    if (at_end()) fail("expected an index letter", pos_);
    fail("index letter '" + std::string(1, c) + "' outside a..z", pos_);
  }

  void group(std::vector<IndexSpec>& out, Variance v) {
    if (peek() == '{') {
      ++pos_;
      skip_space();
      if (peek() == '}') fail("empty index group", pos_);
      while (peek() != '}') {
        if (at_end()) fail("unterminated index group", pos_);
        out.push_back(index(v));
        skip_space();
      }
      ++pos_;
    } else {
      out.push_back(index(v));
    }
  }

  /// Index groups directly following a name. Returns false if none.
  bool groups(std::vector<IndexSpec>& out) {
    bool any = false;
    while (true) {
      const std::size_t save = pos_;
      skip_space();
      const char c = peek();
      if (c != '_' && c != '^') {
        pos_ = save;
        return any;
      }
      ++pos_;
      skip_space();
      group(out, c == '^' ? Variance::Up : Variance::Down);
      any = true;
    }
  }

  FactorRef target() {
    FactorRef f;
    skip_space();
    f.position = pos_;
    f.name = name();
    groups(f.indices);
    return f;
  }

  FactorRef factor() {
    FactorRef f;
    skip_space();
    f.position = pos_;
    f.name = name();
    if (!groups(f.indices)) {
      fail("factor '" + f.name + "' needs at least one index group", pos_);
    }
    return f;
  }

  bool number_ahead() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double number() {
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ > start) {
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
      } else {
        break;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size()) {
      fail("malformed number '" + literal + "'", start);
    }
    return v;
  }

  Term term(double sign) {
    Term t;
    t.coefficient = sign;
    skip_space();
    if (number_ahead()) {
      t.coefficient *= number();
      skip_space();
      if (peek() != '*') fail("expected '*' after coefficient", pos_);
      ++pos_;
    }
    t.factors.push_back(factor());
    while (true) {
      skip_space();
      if (!is_name_start(peek())) break;
      t.factors.push_back(factor());
    }
    return t;
  }

  void expression(Statement& st) {
    skip_space();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    if (at_end()) fail("empty expression", pos_);
    st.terms.push_back(term(sign));
    while (true) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
      st.terms.push_back(term(sign));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_indices(std::string& out, const std::vector<IndexSpec>& indices) {
  std::size_t k = 0;
  while (k < indices.size()) {
    const Variance v = indices[k].variance;
    std::string run;
    while (k < indices.size() && indices[k].variance == v) {
      run += indices[k].symbol;
      ++k;
    }
    out += v == Variance::Up ? '^' : '_';
    if (run.size() == 1) {
      out += run;
    } else {
      out += '{' + run + '}';
    }
  }
}

}  // namespace

Statement parse(std::string_view text) { return Parser(text).statement(); }

std::string format(const Statement& statement) {
  std::string out;
  if (statement.target) {
    out += statement.target->name;
    append_indices(out, statement.target->indices);
    out += " = ";
  }
  for (std::size_t t = 0; t < statement.terms.size(); ++t) {
    const auto& term = statement.terms[t];
    double c = term.coefficient;
    if (t > 0) {
      out += c < 0 ? " - " : " + ";
      c = std::abs(c);
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (c != 1.0) out += detail::format_number(c, 17) + "*";
    for (std::size_t f = 0; f < term.factors.size(); ++f) {
      if (f > 0) out += ' ';
      out += term.factors[f].name;
      append_indices(out, term.factors[f].indices);
    }
  }
  return out;
}

}  // namespace tensoralg::einsum

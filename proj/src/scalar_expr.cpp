#include "anyonkit/scalar_expr.hpp"

#include <cctype>
#include <vector>

namespace anyonkit {
namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("scalar expr '" + s + "': " + why);
  }

  Cyc expr() {
    Cyc acc = eat('-') ? -term() : term();
    for (;;) {
      ws();
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Cyc term() {
    Cyc acc = factor();
    for (;;) {
      ws();
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        acc *= factor().inverse();
      } else {
        // implicit product, e.g. "2r2" or "r3 i"
        ws();
        if (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '(')) {
          acc *= factor();
        } else {
          return acc;
        }
      }
    }
  }

  Cyc factor() {
    ws();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Cyc v = expr();
      if (!eat(')')) fail("missing ')' ");
      return v;
    }
    if (c == '-') {
      ++pos;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Cyc(rational_from_string(s.substr(start, pos - start)));
    }
    if (c == 'w') {
      ++pos;
      if (pos < s.size() && s[pos] == '2') {
        ++pos;
        return Cyc::omega() * Cyc::omega();
      }
      return Cyc::omega();
    }
    if (c == 'i') {
      ++pos;
      return Cyc::imag_unit();
    }
    if (c == 't') {
      ++pos;
      return Cyc::tau();
    }
    if (c == 'r') {
      ++pos;
      if (pos < s.size() && s[pos] == '2') {
        ++pos;
        return Cyc::sqrt2();
      }
      if (pos < s.size() && s[pos] == '3') {
        ++pos;
        return Cyc::sqrt3();
      }
      if (pos < s.size() && s[pos] == '6') {
        ++pos;
        return Cyc::sqrt6();
      }
      fail("expected r2, r3 or r6");
    }
    if (c == 'z') {
      ++pos;
      long k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        bool neg = eat('-');
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected exponent after z^");
        k = std::stol(s.substr(start, pos - start));
        if (neg) k = -k;
      }
      return Cyc::zeta_pow(k);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Cyc parse_scalar(const std::string& s) {
  Parser p(s);
  Cyc v = p.expr();
  p.ws();
  if (p.pos != s.size()) p.fail("trailing input");
  return v;
}

Mat parse_matrix(const std::string& rows, const std::string& prefactor) {
  Cyc pre = parse_scalar(prefactor);
  auto rlist = split(rows, ';');
  std::vector<std::vector<Cyc>> vals;
  size_t ncols = 0;
  for (const auto& row : rlist) {
    std::vector<Cyc> rv;
    for (const auto& cell : split(row, ',')) rv.push_back(parse_scalar(cell) * pre);
    if (ncols == 0)
      ncols = rv.size();
    else if (rv.size() != ncols)
      throw std::invalid_argument("ragged matrix literal: " + rows);
    vals.push_back(std::move(rv));
  }
  Mat m(int(vals.size()), int(ncols));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = vals[i][j];
  return m;
}

}  // namespace anyonkit

#include "qslab/opspec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "json.hpp"

namespace qslab {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const BergmanSpace& s) : t_(text), s_(s) {}

  BergOperator run() {
    BergOperator out = expr();
    skip();
    if (pos_ != t_.size()) fail("unexpected '" + std::string(1, t_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError("operator spec: " + what + " at offset " + std::to_string(pos_) + " in \"" + t_ + "\"");
  }

  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < t_.size() && t_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const std::string& w) {
    skip();
    if (t_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[end])) || t_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  bool number_ahead() {
    skip();
    return pos_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '.');
  }
  double number() {
    skip();
    double v = 0.0;
    const auto [p, ec] = std::from_chars(t_.data() + pos_, t_.data() + t_.size(), v);
    if (ec != std::errc() || !std::isfinite(v)) fail("bad number");
    pos_ = static_cast<std::size_t>(p - t_.data());
    return v;
  }

  // unsigned real, real 'i', or bare 'i'
  Complex unsigned_part() {
    if (eat_word("i")) return {0.0, 1.0};
    if (!number_ahead()) fail("expected a number");
    const double v = number();
    if (pos_ < t_.size() && t_[pos_] == 'i') {
      ++pos_;
      return {0.0, v};
    }
    return {v, 0.0};
  }

  Complex complex_literal() {
    double sign = 1.0;
    if (eat('-')) sign = -1.0;
    else eat('+');
    Complex z = sign * unsigned_part();
    while (peek('+') || peek('-')) {
      const double s = t_[pos_] == '-' ? -1.0 : 1.0;
      ++pos_;
      z += s * unsigned_part();
    }
    return z;
  }

  BergOperator expr() {
    BergOperator acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  BergOperator term() {
    if (eat('-')) return Complex(-1.0) * term();
    skip();
    // atoms start with I, J, P, lift or '(', so a digit or 'i' opens a scalar
    if (number_ahead() || (pos_ < t_.size() && t_[pos_] == 'i')) {
      const Complex c = unsigned_part();
      expect('*');
      return c * atom();
    }
    if (peek('(')) {
      // parenthesized scalar followed by '*', or a grouped expression
      const std::size_t save = pos_;
      ++pos_;
      try {
        const Complex c = complex_literal();
        if (eat(')') && eat('*')) return c * atom();
      } catch (const SpecError&) {
      }
      pos_ = save;
    }
    return atom();
  }

  BergOperator atom() {
    if (eat('(')) {
      BergOperator e = expr();
      expect(')');
      return e;
    }
    if (eat_word("I")) return BergOperator::identity(s_);
    if (eat_word("J")) return BergOperator::j_operator(s_);
    skip();
    if (t_.compare(pos_, 2, "P(") == 0) {
      pos_ += 2;
      const Complex z = complex_literal();
      expect(')');
      if (!(std::abs(z) < 1.0)) fail("P(z) needs |z| < 1");
      return projection_pz(s_, z);
    }
    if (t_.compare(pos_, 5, "lift(") == 0) {
      pos_ += 5;
      const std::size_t close = t_.find(')', pos_);
      if (close == std::string::npos) fail("unterminated lift(");
      std::string path = t_.substr(pos_, close - pos_);
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front()))) path.erase(path.begin());
      pos_ = close + 1;
      return BergOperator::section(read_matrix(path));
    }
    fail("expected I, J, P(z), lift(file) or '('");
  }

  CMatrix read_matrix(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw SpecError("lift: cannot open " + path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw SpecError("lift: " + path + ": " + e.what());
    }
    const std::size_t d = s_.dim();
    if (!j.is_array() || j.size() != d) throw SpecError("lift: " + path + " must hold " + std::to_string(d) + " rows");
    CMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const auto& row = j[r];
      if (!row.is_array() || row.size() != d) throw SpecError("lift: row " + std::to_string(r) + " has wrong length");
      for (std::size_t c = 0; c < d; ++c) {
        const auto& e = row[c];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
          throw SpecError("lift: entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not [re, im]");
        m(r, c) = {e[0].get<double>(), e[1].get<double>()};
      }
    }
    return m;
  }

  const std::string& t_;
  const BergmanSpace& s_;
  std::size_t pos_ = 0;
};

}  // namespace

BergOperator parse_operator(const std::string& spec, const BergmanSpace& s) {
  return Parser(spec, s).run();
}

std::vector<Complex> parse_grid(const std::string& g) {
  const std::size_t x = g.find('x');
  std::size_t r = 0, a = 0;
  const auto rd = std::from_chars(g.data(), g.data() + (x == std::string::npos ? 0 : x), r);
  const auto ad = x == std::string::npos ? std::from_chars_result{nullptr, std::errc::invalid_argument}
                                         : std::from_chars(g.data() + x + 1, g.data() + g.size(), a);
  if (x == std::string::npos || rd.ec != std::errc() || rd.ptr != g.data() + x || ad.ec != std::errc() ||
      ad.ptr != g.data() + g.size())
    throw SpecError("grid must look like RxA, got \"" + g + "\"");
  if (r > 4096 || a > 4096) throw SpecError("grid counts are capped at 4096");
  std::vector<Complex> out;
  if (r == 0 || a == 0) return out;
  out.reserve(r * a);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t t = 0; t < a; ++t) {
      const Complex z = std::polar(double(k) / double(r), 2.0 * std::numbers::pi * double(t) / double(a));
      out.emplace_back(z.real() + 0.0, z.imag() + 0.0);  // no -0 at the origin
    }
  return out;
}

std::string berezin_csv(const BergmanSpace& s, const BergOperator& t, const std::vector<Complex>& grid) {
  std::string out = "re_z,im_z,re_value,im_value\r\n";
  char line[128];
  for (Complex z : grid) {
    const Complex v = berezin(s, t, z).value;
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\r\n", z.real(), z.imag(), v.real(), v.imag());
    out += line;
  }
  return out;
}

}  // namespace qslab

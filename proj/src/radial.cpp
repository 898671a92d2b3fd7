#include "antisym/radial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace antisym {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

double RadialPotential::operator()(double r) const {
  double v = 0;
  for (const auto& t : terms_)
    if (r >= t.lower && r < t.upper) v += t.coeff * std::pow(r, t.power);
  return v;
}

std::vector<double> RadialPotential::breakpoints() const {
  std::vector<double> pts;
  for (const auto& t : terms_) {
    pts.push_back(t.lower);
    pts.push_back(t.upper);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

RadialPotential RadialPotential::scaled(double t) const {
  std::vector<RadialTerm> out = terms_;
  for (auto& term : out) term.coeff *= t;
  return RadialPotential(std::move(out));
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  // Returns false for blank or comment-only lines.
  bool parse(RadialTerm& out) {
    skip_space();
    if (at_end()) return false;
    out.line = line_;
    const std::size_t coeff_at = pos_;
    out.coeff_text = std::string(number_token("coefficient"));
    out.coeff = to_double(out.coeff_text, coeff_at);
    if (out.coeff < 0) fail(coeff_at, "coefficient must be nonnegative (the potential is V >= 0)");
    require_space("after coefficient");
    expect('r');
    expect('^');
    const std::size_t power_at = pos_;
    out.power = to_double(number_token("power"), power_at);
    require_space("after power");
    keyword("on");
    skip_space();
    expect('[');
    skip_space();
    const std::size_t lower_at = pos_;
    out.lower = to_double(number_token("lower bound"), lower_at);
    skip_space();
    expect(',');
    skip_space();
    const std::size_t upper_at = pos_;
    if (text_.substr(pos_).starts_with("inf")) {
      pos_ += 3;
      out.upper = std::numeric_limits<double>::infinity();
    } else {
      out.upper = to_double(number_token("upper bound or 'inf'"), upper_at);
    }
    skip_space();
    expect(')');
    skip_space();
    if (!at_end()) fail(pos_, "unexpected trailing input");
    if (out.lower < 0) fail(lower_at, "interval must lie in r >= 0");
    if (!(out.upper > out.lower)) fail(upper_at, "interval upper bound must exceed lower bound");
    return true;
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size() || text_[pos_] == '#'; }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, static_cast<int>(at) + 1, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  void require_space(const char* where) {
    if (pos_ >= text_.size() || (text_[pos_] != ' ' && text_[pos_] != '\t'))
      fail(pos_, std::string("expected whitespace ") + where);
    skip_space();
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void keyword(std::string_view kw) {
    if (!text_.substr(pos_).starts_with(kw)) fail(pos_, "expected '" + std::string(kw) + "'");
    pos_ += kw.size();
  }

  // [+-]? digits ('.' digits?)? ([eE] [+-]? digits)?, or '.' digits.
  std::string_view number_token(const char* what) {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - s;
    };
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) fail(start, std::string("expected ") + what);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t e_at = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail(e_at, "malformed exponent");
    }
    return text_.substr(start, pos_ - start);
  }

  double to_double(std::string_view tok, std::size_t at) const {
    std::string s(tok);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) fail(at, "number out of range");
    return v;
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

RadialPotential parse_radial_potential(std::string_view text) {
  std::vector<RadialTerm> terms;
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view row = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    RadialTerm t;
    if (LineParser(row, line).parse(t)) terms.push_back(std::move(t));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
    ++line;
  }
  return RadialPotential(std::move(terms));
}

}  // namespace antisym

#pragma once

// Radial potential descriptors: one term per line,
//
//   <coeff> r^<power> on [<a>, <b>)
//
// with <b> = "inf" allowed. Blank lines and '#' comments are ignored. The
// potential is the sum of all terms; overlapping intervals add.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace antisym {

struct RadialTerm {
  double coeff = 0;
  double power = 0;
  double lower = 0;
  double upper = 0;  // may be +infinity
  std::string coeff_text;  // as written, for exact-decimal consumers
  int line = 0;
};

class RadialPotential {
 public:
  RadialPotential() = default;
  explicit RadialPotential(std::vector<RadialTerm> terms) : terms_(std::move(terms)) {}

  [[nodiscard]] const std::vector<RadialTerm>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  /// V(r), summing every term whose interval contains r.
  [[nodiscard]] double operator()(double r) const;

  /// Sorted distinct interval endpoints (may end in +infinity).
  [[nodiscard]] std::vector<double> breakpoints() const;

  /// Copy with every coefficient multiplied by t >= 0.
  [[nodiscard]] RadialPotential scaled(double t) const;

 private:
  std::vector<RadialTerm> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Throws ParseError with 1-based line and column of the offending character.
RadialPotential parse_radial_potential(std::string_view text);

}  // namespace antisym

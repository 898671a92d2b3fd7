#include "antisym/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace antisym {

std::int64_t ExponentVector::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
}

std::size_t ExponentHash::operator()(const ExponentVector& e) const noexcept {
  // FNV-1a over the entries.
  std::size_t h = 1469598103934665603ull;
  for (auto v : e.values()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

bool TermOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  return a < b;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(ExponentVector(num_vars), c);
  return p;
}

Polynomial Polynomial::monomial(ExponentVector e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != num_vars_)
    throw std::invalid_argument("exponent vector length does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Polynomial::degree() const {
  // TermOrder puts the highest total degree first.
  return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.total_degree() == terms_.rbegin()->first.total_degree();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial out(a.num_vars_);
  ExponentVector e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<ExponentVector::value_type>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

std::string render(const Polynomial& p, int d) {
  if (d < 1 || p.num_vars() % static_cast<std::size_t>(d) != 0)
    throw std::invalid_argument("render: variable count not divisible by d");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(v / static_cast<std::size_t>(d) + 1) + '_' +
              std::to_string(v % static_cast<std::size_t>(d) + 1);
      if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + '*' + mono;
  }
  return out;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation image is not a bijection on 1..N");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("transposition index out of range");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    for (std::size_t j = i + 1; j < image_.size(); ++j)
      if (image_[i] > image_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(a.image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b(a.image_[i]);
  return Permutation(std::move(img));
}

}  // namespace antisym

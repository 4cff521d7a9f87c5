#include "lcsynth/bipoly.hpp"

#include <algorithm>

namespace lcs {

BiPoly::BiPoly(TermMap terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int dx, int dy) {
  BiPoly p;
  p.add_term({dx, dy}, c);
  return p;
}

BiPoly BiPoly::in_x(const UniPoly& p) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term({i, 0}, p.coeff(i));
  return out;
}

void BiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

Rational BiPoly::coeff(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::partial_x() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term({e.first - 1, e.second}, c * e.first);
  }
  return out;
}

BiPoly BiPoly::partial_y() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) out.add_term({e.first, e.second - 1}, c * e.second);
  }
  return out;
}

UniPoly BiPoly::y_coefficient(int k) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.second == k) out += UniPoly::monomial(c, e.first);
  }
  return out;
}

UniPoly BiPoly::at_y(const Rational& yv) const {
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    Rational yk;
    mpz_pow_ui(yk.get_num_mpz_t(), yv.get_num_mpz_t(), static_cast<unsigned long>(e.second));
    mpz_pow_ui(yk.get_den_mpz_t(), yv.get_den_mpz_t(), static_cast<unsigned long>(e.second));
    yk.canonicalize();
    out += UniPoly::monomial(c * yk, e.first);
  }
  return out;
}

Rational BiPoly::operator()(const Rational& xv, const Rational& yv) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < e.first; ++i) t *= xv;
    for (int j = 0; j < e.second; ++j) t *= yv;
    acc += t;
  }
  return acc;
}

double BiPoly::operator()(double xv, double yv) const { return BiPolyEvaluator(*this)(xv, yv); }

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

BiPoly invariance_residual(const BiPoly& P, const BiPoly& Q, const BiPoly& f, const BiPoly& k) {
  return P * f.partial_x() + Q * f.partial_y() - k * f;
}

std::string to_pretty(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending y-power, then ascending x-power.
  std::vector<std::pair<BiPoly::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  for (const auto& [e, coef] : terms) {
    Rational c = coef;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = c == 1 && (e.first + e.second) > 0;
    std::string mono;
    auto append = [&mono](char v, int d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    append('x', e.first);
    append('y', e.second);
    if (!unit) out += to_string(c);
    if (!mono.empty()) out += (unit ? "" : "*") + mono;
  }
  return out;
}

BiPolyEvaluator::BiPolyEvaluator(const BiPoly& p) {
  rows_.resize(static_cast<std::size_t>(std::max(p.degree_y() + 1, 0)));
  for (const auto& [e, c] : p.terms()) {
    auto& row = rows_[static_cast<std::size_t>(e.second)];
    if (row.size() <= static_cast<std::size_t>(e.first)) row.resize(static_cast<std::size_t>(e.first) + 1, 0.0);
    row[static_cast<std::size_t>(e.first)] = c.get_d();
  }
}

double BiPolyEvaluator::operator()(double xv, double yv) const {
  double acc = 0.0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * yv + horner(*it, xv);
  return acc;
}

}  // namespace lcs

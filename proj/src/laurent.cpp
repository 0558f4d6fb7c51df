#include "levibranch/laurent.hpp"

#include <algorithm>

#include "levibranch/errors.hpp"

namespace levibranch {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p(coeff);
  if (coeff != 0) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, std::int64_t>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + first, coeffs_.begin() + last);
  low_ += static_cast<int>(first);
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  const int k = exponent - low_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out[low_ + static_cast<int>(k)] = coeffs_[k];
  return out;
}

bool LaurentPoly::even_exponents_only() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0 && ((low_ + static_cast<int>(k)) % 2 != 0)) return false;
  return true;
}

bool LaurentPoly::all_coefficients_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(degree(), o.degree());
  std::vector<std::int64_t> c(hi - lo + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[low_ - lo + k] = coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    c[o.low_ - lo + k] = checked_add(c[o.low_ - lo + k], o.coeffs_[k]);
  low_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw InternalError("substitute_power(0)");
  LaurentPoly r;
  for (const auto& [e, c] : terms()) r += monomial(c, e * k);
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("division by the zero polynomial");
  if (is_zero()) return {};
  // Long division from the top degree down.
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const std::int64_t lead = divisor.leading_coefficient();
  const int span = divisor.degree() - divisor.valuation();
  while (!rem.is_zero() && rem.degree() - rem.valuation() >= span) {
    if (rem.leading_coefficient() % lead != 0) break;
    LaurentPoly term = monomial(rem.leading_coefficient() / lead, rem.degree() - divisor.degree());
    quot += term;
    rem -= term * divisor;
  }
  if (!rem.is_zero()) throw InternalError("inexact polynomial division: " + to_string("x") + " / " +
                                          divisor.to_string("x"));
  return quot;
}

BigRational LaurentPoly::evaluate(const BigRational& point) const {
  BigRational s = 0;
  for (const auto& [e, c] : terms()) {
    BigRational p = 1;
    const BigRational base = e >= 0 ? point : BigRational(1) / point;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    s += BigRational(c) * p;
  }
  return s;
}

BigRational LaurentPoly::evaluate_at_q(std::int64_t q) const {
  if (!even_exponents_only()) throw DomainError("evaluate_at_q: odd power of v in " + to_string());
  return substitute_half().evaluate(BigRational(q));
}

LaurentPoly LaurentPoly::substitute_half() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms()) {
    if (e % 2 != 0) throw DomainError("odd power of v in " + to_string());
    r += monomial(c, e / 2);
  }
  return r;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  const auto t = terms();
  bool first = true;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t a = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += var;
    if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return s;
}

std::string LaurentPoly::to_q_string() const { return substitute_half().to_string("q"); }

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms_json = nlohmann::json::object();
  for (const auto& [e, c] : terms()) terms_json[std::to_string(e)] = c;
  return {{"exponents_of_v", terms_json}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& [e, c] : j.at("exponents_of_v").items()) p += monomial(c.get<std::int64_t>(), std::stoi(e));
  return p;
}

}  // namespace levibranch

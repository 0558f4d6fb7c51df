#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "levibranch/rational.hpp"

namespace levibranch {

// Integer Laurent polynomial in one variable. In the Hecke module the
// variable is v = q^{1/2}; the same type carries polynomials in t = q^{-1}
// during Hall-Littlewood symmetrization.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly from_map(const std::map<int, std::int64_t>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest and highest exponents; only meaningful when nonzero.
  int valuation() const { return low_; }
  int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const;
  std::int64_t leading_coefficient() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::map<int, std::int64_t> terms() const;

  // Every exponent is even, i.e. the polynomial is a Laurent polynomial in
  // q = v^2.
  bool even_exponents_only() const;
  bool all_coefficients_nonnegative() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  // x -> x^k (k may be negative).
  LaurentPoly substitute_power(int k) const;
  // Exact division; throws InternalError when the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // v^{2k} -> q^k; throws DomainError on an odd exponent.
  LaurentPoly substitute_half() const;

  // Value at x = point.
  BigRational evaluate(const BigRational& point) const;
  // Value at q when the variable is v = q^{1/2}; requires even exponents.
  BigRational evaluate_at_q(std::int64_t q) const;

  // e.g. "v^2 + v - 1"; `var` names the variable.
  std::string to_string(const std::string& var = "v") const;
  // Rendering in q = v^2 ("q^2 + q + 1"); requires even exponents.
  std::string to_q_string() const;

  // {"exponents_of_v": {"-1": 1, "2": 3}}
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void normalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;  // coeffs_[k] multiplies x^(low_ + k)
};

}  // namespace levibranch

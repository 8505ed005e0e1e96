#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockcb/errors.hpp"

namespace fockcb {

// Coefficient type of the scalar ring. Fixed-width backing; all arithmetic
// is overflow-checked and raises InternalError rather than wrapping.
using coeff_t = std::int64_t;

coeff_t checked_add(coeff_t a, coeff_t b);
coeff_t checked_mul(coeff_t a, coeff_t b);

/// Laurent polynomial in q over the integers.
///
/// Dense coefficient window keyed by the lowest exponent: coeffs()[k] is the
/// coefficient of q^(lo()+k). Zero is canonically the empty window; for a
/// nonzero value the first and last stored coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(coeff_t constant);  // implicit: integers embed in the ring

  static LaurentPoly q_power(int exponent, coeff_t c = 1);
  static LaurentPoly from_coeffs(int lo, std::vector<coeff_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  int lo() const { return lo_; }
  const std::vector<coeff_t>& coeffs() const { return coeffs_; }
  int lowest_exponent() const;   // nonzero values only
  int highest_exponent() const;  // nonzero values only
  coeff_t coeff(int exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  bool operator==(const LaurentPoly& other) const;
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  /// The bar involution q -> q^-1.
  LaurentPoly bar() const;

  /// True iff every nonzero term has exponent >= 1 (membership in qZ[q]).
  bool positive_valuation() const;

  /// The unique bar-fixed c with (*this - c) of positive valuation:
  /// c = a_0 + sum_{k>0} a_{-k} (q^k + q^-k) for a = sum a_k q^k.
  LaurentPoly symmetrize_correction() const;

  /// Descending powers, e.g. "q^2+1+q^-2"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();

  int lo_ = 0;
  std::vector<coeff_t> coeffs_;
};

/// [r] = (q^r - q^-r)/(q - q^-1) = q^(r-1) + q^(r-3) + ... + q^(1-r).
LaurentPoly quantum_integer(int r);

/// [r]! = [r][r-1]...[1], with [0]! = 1.
LaurentPoly quantum_factorial(int r);

}  // namespace fockcb

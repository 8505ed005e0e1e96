#include "fockcb/laurent.hpp"

#include <algorithm>

namespace fockcb {

coeff_t checked_add(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("coefficient overflow in add");
  return r;
}

coeff_t checked_mul(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("coefficient overflow in mul");
  return r;
}

LaurentPoly::LaurentPoly(coeff_t constant) {
  if (constant != 0) {
    lo_ = 0;
    coeffs_ = {constant};
  }
}

LaurentPoly LaurentPoly::q_power(int exponent, coeff_t c) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = exponent;
    p.coeffs_ = {c};
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int lo, std::vector<coeff_t> coeffs) {
  LaurentPoly p;
  p.lo_ = lo;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  std::size_t last = coeffs_.size();
  while (last > first && coeffs_[last - 1] == 0) --last;
  if (first == last) {
    lo_ = 0;
    coeffs_.clear();
    return;
  }
  lo_ += static_cast<int>(first);
  coeffs_ = std::vector<coeff_t>(coeffs_.begin() + first, coeffs_.begin() + last);
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && lo_ == 0 && coeffs_[0] == 1; }

int LaurentPoly::lowest_exponent() const {
  if (is_zero()) throw InternalError("lowest_exponent of zero");
  return lo_;
}

int LaurentPoly::highest_exponent() const {
  if (is_zero()) throw InternalError("highest_exponent of zero");
  return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

coeff_t LaurentPoly::coeff(int exponent) const {
  if (exponent < lo_ || exponent >= lo_ + static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - lo_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const int lo = std::min(lo_, other.lo_);
  const int hi = std::max(highest_exponent(), other.highest_exponent());
  std::vector<coeff_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out[static_cast<std::size_t>(lo_ - lo) + k] = coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    auto& slot = out[static_cast<std::size_t>(other.lo_ - lo) + k];
    slot = checked_add(slot, other.coeffs_[k]);
  }
  return from_coeffs(lo, std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return LaurentPoly();
  std::vector<coeff_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return from_coeffs(lo_ + other.lo_, std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) { return *this = *this + other; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this = *this - other; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return lo_ == other.lo_ && coeffs_ == other.coeffs_;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return *this;
  std::vector<coeff_t> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_coeffs(-highest_exponent(), std::move(rev));
}

bool LaurentPoly::positive_valuation() const { return is_zero() || lo_ >= 1; }

LaurentPoly LaurentPoly::symmetrize_correction() const {
  LaurentPoly c;
  if (is_zero() || lo_ >= 1) return c;
  c += LaurentPoly(coeff(0));
  for (int k = lo_; k < 0; ++k) {
    const coeff_t a = coeff(k);
    if (a == 0) continue;
    c += LaurentPoly::q_power(k, a);
    c += LaurentPoly::q_power(-k, a);
  }
  return c;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = highest_exponent(); e >= lowest_exponent(); --e) {
    const coeff_t c = coeff(e);
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? "+" : "-";
    else if (c < 0) out += "-";
    const coeff_t abs = c > 0 ? c : -c;
    if (abs != 1 || e == 0) out += std::to_string(abs);
    if (e != 0) {
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly quantum_integer(int r) {
  if (r < 0) throw BadInputError("quantum_integer: negative argument");
  LaurentPoly p;
  for (int e = r - 1; e >= 1 - r; e -= 2) p += LaurentPoly::q_power(e);
  return p;
}

LaurentPoly quantum_factorial(int r) {
  if (r < 0) throw BadInputError("quantum_factorial: negative argument");
  LaurentPoly p(1);
  for (int k = 2; k <= r; ++k) p *= quantum_integer(k);
  return p;
}

}  // namespace fockcb

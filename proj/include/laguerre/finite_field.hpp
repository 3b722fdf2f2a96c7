#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace laguerre {

struct FieldElement {
  std::uint32_t index = 0;

  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(p^k) for p^k <= 64, all arithmetic through precomputed tables.
///
/// Element i of GF(p^k) is the residue polynomial sum_j c_j t^j with
/// i = sum_j c_j p^j, reduced modulo a fixed monic irreducible polynomial:
///
///   GF(4)  t^2+t+1     GF(8)  t^3+t+1     GF(16) t^4+t+1
///   GF(32) t^5+t^2+1   GF(64) t^6+t+1     GF(9)  t^2+1
///   GF(27) t^3+2t+1    GF(25) t^2+t+2     GF(49) t^2+t+3
///
/// so index 0 is zero, index 1 is one and, for k > 1, index p is t.
class FiniteField {
 public:
  static constexpr unsigned kMaxOrder = 64;

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  unsigned order() const noexcept { return q_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(unsigned index) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    return {add_[a.index * q_ + b.index]};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return add(a, neg(b));
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return {mul_[a.index * q_ + b.index]};
  }
  FieldElement neg(FieldElement a) const noexcept { return {neg_[a.index]}; }
  /// Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// All x with x*x == e.
  std::vector<FieldElement> square_roots(FieldElement e) const;

  /// Coefficients (low to high) of the reduction polynomial; {0, 1} for k = 1.
  std::span<const unsigned> modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  friend FiniteField make_field(unsigned p, unsigned k);

 private:
  FiniteField() = default;

  unsigned p_ = 0;
  unsigned k_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

/// Builds GF(p^k). Throws UnsupportedField when p is not prime or p^k > 64.
FiniteField make_field(unsigned p, unsigned k);

/// Splits a prime power q into (p, k); throws UnsupportedField otherwise.
FiniteField make_field_of_order(unsigned q);

bool is_prime(unsigned n);

}  // namespace laguerre

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "icsie/error.hpp"

namespace icsie {

/// Canonical representation of an element of F_q: an integer in [0, q) whose
/// base-p digits are the coefficients of the polynomial residue (digit k is
/// the coefficient of x^k).
using Elem = std::uint32_t;

/// Largest supported field size.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

/// The finite field F_q, q = p^e. Immutable once built and safe to share
/// between threads. Extension fields use the lexicographically smallest monic
/// irreducible modulus (lower coefficients read as a base-p integer).
class Field {
 public:
  /// Throws NotPrimePower or TooLarge.
  static std::shared_ptr<const Field> make(std::uint64_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Coefficients c_0..c_{e-1} of the monic modulus x^e + ... ; empty for
  /// prime fields.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// Polynomial multiplication followed by reduction, never table driven.
  /// `mul` must agree with it everywhere.
  Elem mul_schoolbook(Elem a, Elem b) const;

  std::uint64_t multiplicative_order(Elem a) const;
  /// Smallest generator of F_q^*.
  Elem primitive_element() const;

  bool contains(Elem a) const noexcept { return a < q_; }
  void check(Elem a) const;

  std::string describe() const;

  bool operator==(const Field& other) const noexcept {
    return q_ == other.q_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t e, std::vector<Elem> modulus);

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<Elem> modulus_;
  // Full tables for q <= kTableLimit, filled from mul_schoolbook.
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> add_table_;
  std::vector<Elem> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Shorthand for Field::make.
inline FieldPtr field_make(std::uint64_t q) { return Field::make(q); }

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// An element bundled with its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem rep);

  const FieldPtr& field() const noexcept { return field_; }
  Elem rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field_, b.field_) && a.rep_ == b.rep_;
  }

 private:
  FieldPtr field_;
  Elem rep_;
};

/// Prime-power test used by Field::make: returns {p, e} or {0, 0}.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

}  // namespace icsie

#include "packed.hpp"

#include <bit>
#include <cmath>

#include "icsie/budget.hpp"

namespace icsie {

bool within_bits(std::uint64_t base, std::size_t exponent, std::size_t bits) {
  if (bits >= 63) bits = 63;
  const std::uint64_t limit = std::uint64_t{1} << bits;
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && acc > limit / base) return false;
    acc *= base;
  }
  return acc <= limit;
}

void require_within_bits(std::uint64_t base, std::size_t exponent, std::size_t bits, const char* what) {
  if (!within_bits(base, exponent, bits)) {
    throw Error(ErrorCode::BudgetExceeded,
                std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(exponent) +
                    " exceeds 2^" + std::to_string(bits));
  }
}

namespace detail {

PackedSpace::PackedSpace(FieldPtr field, std::size_t length)
    : field_(std::move(field)), length_(length), q_(field_->size()) {
  require_within_bits(q_, length_, 62, "packed vector space");
  if (std::has_single_bit(q_)) bits_ = static_cast<unsigned>(std::countr_zero(q_));
  place_.assign(length_, 1);
  for (std::size_t k = length_; k-- > 0;) {
    place_[k] = (k + 1 == length_) ? 1 : place_[k + 1] * q_;
  }
  size_ = length_ == 0 ? 1 : place_[0] * q_;
}

std::uint64_t PackedSpace::pack(std::span<const Elem> v) const {
  std::uint64_t code = 0;
  for (std::size_t k = 0; k < length_; ++k) code = code * q_ + v[k];
  return code;
}

void PackedSpace::unpack(std::uint64_t code, std::span<Elem> out) const {
  for (std::size_t k = length_; k-- > 0;) {
    out[k] = static_cast<Elem>(code % q_);
    code /= q_;
  }
}

std::vector<Elem> PackedSpace::unpack(std::uint64_t code) const {
  std::vector<Elem> out(length_);
  unpack(code, out);
  return out;
}

Elem PackedSpace::digit(std::uint64_t code, std::size_t k) const {
  if (bits_ != 0) {
    return static_cast<Elem>((code >> ((length_ - 1 - k) * bits_)) & (q_ - 1));
  }
  return static_cast<Elem>((code / place_[k]) % q_);
}

std::uint64_t PackedSpace::add(std::uint64_t a, std::uint64_t b) const {
  if (bits_ != 0) return a ^ b;
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < length_; ++k) {
    out = out * q_ + field_->add(digit(a, k), digit(b, k));
  }
  return out;
}

std::uint64_t PackedSpace::scale(Elem c, std::uint64_t a) const {
  if (c == 1) return a;
  if (c == 0) return 0;
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < length_; ++k) out = out * q_ + field_->mul(c, digit(a, k));
  return out;
}

std::size_t PackedSpace::weight(std::uint64_t code) const {
  if (q_ == 2) return static_cast<std::size_t>(std::popcount(code));
  std::size_t w = 0;
  for (std::size_t k = 0; k < length_; ++k) w += digit(code, k) != 0;
  return w;
}

}  // namespace detail
}  // namespace icsie

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icsie/field.hpp"

namespace icsie::detail {

/// Vectors of F_q^len packed into integers, first coordinate most
/// significant. Integer order equals lexicographic order of the vectors.
class PackedSpace {
 public:
  PackedSpace(FieldPtr field, std::size_t length);

  std::uint64_t size() const noexcept { return size_; }
  std::size_t length() const noexcept { return length_; }
  const Field& field() const noexcept { return *field_; }

  std::uint64_t pack(std::span<const Elem> v) const;
  void unpack(std::uint64_t code, std::span<Elem> out) const;
  std::vector<Elem> unpack(std::uint64_t code) const;

  Elem digit(std::uint64_t code, std::size_t k) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t scale(Elem c, std::uint64_t a) const;
  std::size_t weight(std::uint64_t code) const;

 private:
  FieldPtr field_;
  std::size_t length_;
  std::uint32_t q_;
  std::uint64_t size_;
  unsigned bits_ = 0;  // bits per digit when q is a power of two
  std::vector<std::uint64_t> place_;  // q^(length-1-k)
};

}  // namespace icsie::detail

#include "icsie/field.hpp"

#include <sstream>

namespace icsie {
namespace {

constexpr std::uint32_t kTableLimit = 256;

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Polynomials over F_p as coefficient vectors, index = degree.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t k = p - 2;
  while (k > 0) {
    if (k & 1u) result = result * base % p;
    base = base * base % p;
    k >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::size_t shift = a.size() - m.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t sub = factor * m[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
  // Monic polynomial of the given degree whose lower coefficients are the
  // base-p digits of index.
  Poly out(degree + 1, 0);
  for (std::uint32_t k = 0; k < degree; ++k) {
    out[k] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  out[degree] = 1;
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, poly_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), e};
}

std::shared_ptr<const Field> Field::make(std::uint64_t q) {
  if (q > kMaxFieldSize) {
    throw Error(ErrorCode::TooLarge,
                "field size " + std::to_string(q) + " exceeds 2^16");
  }
  const auto [p, e] = prime_power_decompose(q);
  if (p == 0 || !is_prime(p)) {
    throw Error(ErrorCode::NotPrimePower,
                "field size " + std::to_string(q) + " is not a prime power");
  }
  std::vector<Elem> modulus;
  if (e > 1) {
    const std::uint64_t count = ipow(p, e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly candidate = poly_from_index(idx, e, p);
      if (is_irreducible(candidate, p)) {
        modulus.assign(candidate.begin(), candidate.end() - 1);
        break;
      }
    }
  }
  return std::shared_ptr<const Field>(new Field(p, e, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<Elem> modulus)
    : p_(p), e_(e), q_(static_cast<std::uint32_t>(ipow(p, e))), modulus_(std::move(modulus)) {
  if (q_ <= kTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    inv_table_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) {
        Elem sum = 0;
        Elem scale = 1;
        Elem x = a;
        Elem y = b;
        for (std::uint32_t k = 0; k < e_; ++k) {
          sum += ((x % p_ + y % p_) % p_) * scale;
          x /= p_;
          y /= p_;
          scale *= p_;
        }
        const std::size_t at = static_cast<std::size_t>(a) * q_ + b;
        add_table_[at] = static_cast<std::uint16_t>(sum);
        const Elem prod = mul_schoolbook(a, b);
        mul_table_[at] = static_cast<std::uint16_t>(prod);
        if (prod == 1) inv_table_[a] = b;
      }
    }
  }
}

void Field::check(Elem a) const {
  if (a >= q_) {
    throw Error(ErrorCode::InvalidArgument,
                "value " + std::to_string(a) + " is not an element of F_" + std::to_string(q_));
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return (a + b) % q_;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Elem sum = 0;
  Elem scale = 1;
  for (std::uint32_t k = 0; k < e_; ++k) {
    sum += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return sum;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return a == 0 ? 0 : q_ - a;
  Elem out = 0;
  Elem scale = 1;
  for (std::uint32_t k = 0; k < e_; ++k) {
    const Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_schoolbook(Elem a, Elem b) const {
  if (e_ == 1) {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::vector<std::uint64_t> x(e_), y(e_);
  for (std::uint32_t k = 0; k < e_; ++k) {
    x[k] = a % p_;
    y[k] = b % p_;
    a /= p_;
    b /= p_;
  }
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j) {
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
  }
  // x^e = -(c_0 + c_1 x + ... + c_{e-1} x^{e-1})
  for (std::size_t k = prod.size(); k-- > e_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t j = 0; j < e_; ++j) {
      const std::uint64_t sub = c * modulus_[j] % p_;
      prod[k - e_ + j] = (prod[k - e_ + j] + p_ - sub) % p_;
    }
  }
  Elem out = 0;
  for (std::uint32_t k = e_; k-- > 0;) out = out * p_ + static_cast<Elem>(prod[k]);
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_schoolbook(a, b);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem result = 1;
  Elem base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = 1;
  Elem x = a;
  while (x != 1) {
    x = mul(x, a);
    ++order;
  }
  return order;
}

Elem Field::primitive_element() const {
  for (Elem a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  return 1;  // unreachable for q >= 2
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " = F_" << p_ << "[x]/(x^" << e_;
    for (std::uint32_t k = e_; k-- > 0;) {
      if (modulus_[k] == 0) continue;
      os << " + ";
      if (modulus_[k] != 1 || k == 0) os << modulus_[k];
      if (k >= 1) os << "x";
      if (k >= 2) os << "^" << k;
    }
    os << ")";
  }
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

FieldElement::FieldElement(FieldPtr field, Elem rep) : field_(std::move(field)), rep_(rep) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  field_->check(rep_);
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(rep_)}; }

FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(rep_, k)}; }

FieldElement FieldElement::operator-() const { return {field_, field_->neg(rep_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->add(a.rep_, b.rep_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->sub(a.rep_, b.rep_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.rep_, b.rep_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->div(a.rep_, b.rep_)};
}

}  // namespace icsie

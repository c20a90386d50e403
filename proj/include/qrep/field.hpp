#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrep/error.hpp"

namespace qrep {

/// An element of GF(p^k), stored as the index sum c_i p^i of its coefficient
/// tuple. The index is also its position in FieldSpec::enumerate(), so 0 is
/// the additive and 1 the multiplicative identity in every field.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(static_cast<std::uint16_t>(index)) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint16_t index_ = 0;
};

inline constexpr std::uint32_t kMaxFieldOrder = 65536;

namespace detail {

// Lookup tables shared by every copy of a FieldSpec.
struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  bool full_tables = false;
  std::vector<std::uint16_t> add;  // q*q when full_tables
  std::vector<std::uint16_t> mul;  // q*q when full_tables
  std::vector<std::uint16_t> neg;  // q
  std::vector<std::uint16_t> inv;  // q, inv[0] unused
  std::vector<std::uint16_t> exp;  // q-1, extension fields without full tables
  std::vector<std::uint32_t> log;  // q
};

}  // namespace detail

/// GF(p^k) = GF(p)[t] / (modulus). Cheap to copy; all copies share tables.
class FieldSpec {
 public:
  /// Validates p and the modulus. Without a modulus, k must be 1 or appear in
  /// the default table (GF(4), GF(8), GF(9), GF(25), GF(27)).
  static FieldSpec make(std::uint32_t p, std::uint32_t k,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Accepts "GF(p^k)", "GF(q)", "GF(p^k):c0,...,ck" and "GF(p^k) mod c0,...,ck".
  static FieldSpec parse(std::string_view text);

  static std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t k() const { return t_->k; }
  std::uint32_t q() const { return t_->q; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  static constexpr FieldElement zero() { return FieldElement(0); }
  static constexpr FieldElement one() { return FieldElement(1); }

  bool contains(FieldElement a) const { return a.index() < t_->q; }
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;

  /// All q elements in index order; [0] is zero and [1] is one.
  std::vector<FieldElement> enumerate() const;

  FieldElement add(FieldElement a, FieldElement b) const {
    const auto& t = *t_;
    if (t.full_tables) return FieldElement(t.add[a.index() * t.q + b.index()]);
    if (t.k == 1) {
      std::uint32_t s = a.index() + b.index();
      return FieldElement(s >= t.p ? s - t.p : s);
    }
    return add_digits(a, b);
  }

  FieldElement neg(FieldElement a) const { return FieldElement(t_->neg[a.index()]); }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    const auto& t = *t_;
    if (t.full_tables) return FieldElement(t.mul[a.index() * t.q + b.index()]);
    if (a.is_zero() || b.is_zero()) return zero();
    if (t.k == 1) {
      return FieldElement(static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(a.index()) * b.index() % t.p));
    }
    std::uint32_t e = t.log[a.index()] + t.log[b.index()];
    if (e >= t.q - 1) e -= t.q - 1;
    return FieldElement(t.exp[e]);
  }

  /// Throws DivisionByZero for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Decimal for prime fields, "c0:c1:...:c{k-1}" otherwise.
  std::string format(FieldElement a) const;
  FieldElement parse_element(std::string_view text) const;

  /// "GF(p^k) mod c0,c1,...,ck"
  std::string header() const;

  /// Direct polynomial multiplication modulo the modulus, bypassing tables.
  FieldElement mul_reference(FieldElement a, FieldElement b) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->k == b.t_->k && a.t_->modulus == b.t_->modulus);
  }

  const detail::FieldTables& tables() const { return *t_; }

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  FieldElement add_digits(FieldElement a, FieldElement b) const;

  std::shared_ptr<const detail::FieldTables> t_;
};

enum class ArithKind { Add, Sub, Mul, Inv, Neg };

/// Checked single operation: validates operands against the spec.
FieldElement ff_arith(const FieldSpec& spec, ArithKind kind, FieldElement a,
                      std::optional<FieldElement> b = std::nullopt);

bool is_prime(std::uint64_t n);

}  // namespace qrep

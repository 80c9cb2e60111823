#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordeq/errors.hpp"

namespace ordeq {

/// Arbitrary-precision natural number (coefficients, lengths, counts).
using Nat = mpz_class;

/// An ordinal below epsilon_0 in Cantor normal form:
/// w^e_n * c_n + ... + w^e_0 * c_0 with e_n > ... > e_0 (ordinal exponents,
/// themselves Ordinals) and every coefficient >= 1. The empty sum is 0.
///
/// Values are canonical by construction and immutable afterwards; all
/// operations are pure functions, so concurrent use needs no locking.
class Ordinal {
public:
  struct Part;

  /// Zero.
  Ordinal() = default;

  /// The finite ordinal n.
  explicit Ordinal(unsigned long n);
  explicit Ordinal(const Nat& n);

  static Ordinal omega();

  /// w^exponent * coefficient; coefficient 0 gives 0.
  static Ordinal omega_power(const Ordinal& exponent, const Nat& coefficient = Nat(1));

  /// Canonicalizing constructor: the ordinal sum of the given parts in order.
  static Ordinal from_parts(const std::vector<Part>& parts);

  bool is_zero() const noexcept;
  /// True for 0 and for w^0*c (plain naturals).
  bool is_natural() const noexcept;
  /// The value as a natural number, absent when infinite.
  std::optional<Nat> natural_value() const;

  /// CNF parts, largest exponent first.
  const std::vector<Part>& parts() const noexcept;

private:
  friend Ordinal add(const Ordinal& a, const Ordinal& b);
  friend Ordinal omega_mul(const Ordinal& a);
  friend std::pair<Ordinal, Ordinal> split_at(const Ordinal& a, const Ordinal& threshold);

  static Ordinal from_canonical(std::vector<Part>&& parts);

  std::vector<Part> parts_;
};

struct Ordinal::Part {
  Ordinal exponent;
  Nat coefficient;
};

/// Total order on ordinals (lexicographic on CNF).
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b);
}
inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::equal;
}

/// Ordinal sum. Not commutative: 1 + w = w but w + 1 > w.
Ordinal add(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

/// Left multiplication by w: each exponent e becomes 1 + e, and w*0 = 0.
Ordinal omega_mul(const Ordinal& a);

/// Largest exponent of the CNF; absent for 0.
std::optional<Ordinal> degree(const Ordinal& a);

/// Smallest exponent of the CNF; absent for 0.
std::optional<Ordinal> valuation(const Ordinal& a);

/// Sum of the CNF coefficients; 0 for 0.
Nat length(const Ordinal& a);

/// Coefficient of w^exponent in the CNF, 0 when that exponent is absent.
Nat coefficient_of(const Ordinal& a, const Ordinal& exponent);

/// Unique split a = high + low with all exponents of high >= threshold and
/// all exponents of low < threshold.
std::pair<Ordinal, Ordinal> split_at(const Ordinal& a, const Ordinal& threshold);

/// Validates the CNF invariants (strictly decreasing exponents, positive
/// coefficients), recursively. Operation outputs always satisfy this.
bool is_canonical(const Ordinal& a);

/// Parses an ordinal literal:
///   Ord  := '0' | OTerm ('+' OTerm)*
///   OTerm:= Nat | 'w' ('^' OExp)? ('*' Nat)?
///   OExp := Nat | 'w' | '(' Ord ')'
/// Whitespace is insignificant. Terms are summed left to right, so input
/// need not be in normal form. Throws ParseError on malformed input.
Ordinal parse_ordinal(std::string_view text);

/// Canonical rendering: strictly decreasing exponents, ^1 and *1 omitted,
/// the natural part printed last as a bare integer, w^w without parentheses
/// and compound exponents parenthesized. parse_ordinal inverts this exactly.
std::string to_string(const Ordinal& a);

}  // namespace ordeq

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "translie/errors.hpp"

namespace translie {

enum class Family : std::uint8_t { L = 0, M = 1 };

/// One of the basis vectors L_r or M_r. Ordered L-family first, then by index.
struct BasisSymbol {
  Family family = Family::L;
  std::int64_t index = 0;

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;

  bool is_l() const { return family == Family::L; }
  bool is_m() const { return family == Family::M; }

  std::string to_string() const {
    return std::string(family == Family::L ? "L_" : "M_") + std::to_string(index);
  }

  /// Parses "L_3", "M_-2".
  static BasisSymbol parse(std::string_view text) {
    if (text.size() < 3 || (text[0] != 'L' && text[0] != 'M') || text[1] != '_')
      throw ParseError("malformed basis symbol '" + std::string(text) + "'");
    std::int64_t idx = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError("malformed basis index in '" + std::string(text) + "'");
    return {text[0] == 'L' ? Family::L : Family::M, idx};
  }

  friend std::ostream& operator<<(std::ostream& os, const BasisSymbol& s) { return os << s.to_string(); }
};

inline BasisSymbol L(std::int64_t r) { return {Family::L, r}; }
inline BasisSymbol M(std::int64_t r) { return {Family::M, r}; }

/// Index arithmetic never wraps around.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw IndexOverflow("index overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw IndexOverflow("index overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, std::int64_t c) {
  return checked_add(checked_add(a, b), c);
}

}  // namespace translie

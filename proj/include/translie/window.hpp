#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "translie/basis.hpp"
#include "translie/errors.hpp"

namespace translie {

/// Inclusive index range [lo, hi] over which laws are quantified.
class Window {
 public:
  Window(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw DomainError("window lower bound " + std::to_string(lo) + " exceeds upper bound " + std::to_string(hi));
  }

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  std::int64_t width() const { return hi_ - lo_; }
  std::size_t count() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }

  bool contains(std::int64_t r) const { return lo_ <= r && r <= hi_; }
  bool contains(BasisSymbol s) const { return contains(s.index); }
  bool contains(const Window& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  Window padded(std::int64_t margin) const { return {checked_sub(lo_, margin), checked_add(hi_, margin)}; }

  std::vector<std::int64_t> indices() const {
    std::vector<std::int64_t> out;
    out.reserve(count());
    for (auto r = lo_; r <= hi_; ++r) out.push_back(r);
    return out;
  }

  /// L_lo..L_hi followed by M_lo..M_hi, i.e. ascending in symbol order.
  std::vector<BasisSymbol> symbols() const {
    std::vector<BasisSymbol> out;
    out.reserve(2 * count());
    for (auto r = lo_; r <= hi_; ++r) out.push_back(L(r));
    for (auto r = lo_; r <= hi_; ++r) out.push_back(M(r));
    return out;
  }

  std::string to_string() const { return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]"; }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::int64_t lo_;
  std::int64_t hi_;
};

}  // namespace translie

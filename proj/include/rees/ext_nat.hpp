#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace rees {

/// A value in N ∪ {∞}; orders, valuations and intersection numbers live here.
class ext_nat {
 public:
  constexpr ext_nat() = default;
  constexpr ext_nat(std::uint64_t v) : value_(v) {}  // NOLINT(implicit)

  static constexpr ext_nat infinity() {
    ext_nat r;
    r.inf_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr ext_nat operator+(ext_nat a, ext_nat b) {
    if (a.inf_ || b.inf_) return infinity();
    return ext_nat(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ext_nat a, ext_nat b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ext_nat a, ext_nat b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, ext_nat v) { return os << v.to_string(); }

 private:
  std::uint64_t value_ = 0;
  bool inf_ = false;
};

}  // namespace rees

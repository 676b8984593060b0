#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "qpdom/errors.hpp"

namespace qpdom {

// Natural number extended with an absorbing infinity. Addition saturates, so
// infinite DP states never wrap into plausible-looking cardinalities.
class ExtNat {
 public:
  constexpr ExtNat() : v_(0) {}
  constexpr explicit ExtNat(std::uint64_t v) : v_(v) {}

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.v_ = kInf;
    return e;
  }

  constexpr bool finite() const { return v_ != kInf; }

  std::uint64_t value() const {
    if (!finite()) fail(Errc::Internal, "ExtNat::value() on infinity");
    return v_;
  }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    ExtNat r;
    if (a.v_ == kInf || b.v_ == kInf) {
      r.v_ = kInf;
    } else {
      std::uint64_t s = a.v_ + b.v_;
      r.v_ = (s < a.v_) ? kInf : s;
    }
    return r;
  }

  ExtNat& operator+=(ExtNat b) { return *this = *this + b; }

  friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(ExtNat a, ExtNat b) { return a.v_ <=> b.v_; }

  std::string str() const { return finite() ? std::to_string(v_) : "inf"; }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

constexpr ExtNat min(ExtNat a, ExtNat b) { return b < a ? b : a; }

}  // namespace qpdom

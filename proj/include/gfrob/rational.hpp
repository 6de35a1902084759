// Exact rational scalar on int64 with overflow-checked arithmetic.
#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gfrob {

struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long narrow(i128 v) {
  if (v > i128(std::numeric_limits<long long>::max()) ||
      v < i128(std::numeric_limits<long long>::min()))
    throw overflow_error("rational overflow: value exceeds 64-bit range");
  return static_cast<long long>(v);
}

}  // namespace detail

class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) { *this = make(n, d); }

  static Rat make(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num_ = detail::narrow(n);
    r.den_ = detail::narrow(d);
    return r;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                detail::i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(detail::i128(a.num_) * b.den_ - detail::i128(b.num_) * a.den_,
                detail::i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
  }
  Rat operator-() const { return make(-detail::i128(num_), den_); }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  // "n" when integral, "n/d" otherwise; used for all serialized scalars.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "n" or "n/d" with optional surrounding whitespace.
  static Rat parse(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty rational literal");
    std::string t = s.substr(b, e - b + 1);
    size_t slash = t.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(t));
      return Rat(std::stoll(t.substr(0, slash)), std::stoll(t.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational literal: " + s);
    } catch (const std::out_of_range&) {
      throw overflow_error("rational literal out of range: " + s);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace gfrob

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "avsocle/errors.hpp"

namespace avsocle {

/// Exact rational arithmetic on 64-bit numerator/denominator.
/// Every parameter handled by this library is tiny (induction heights,
/// half-integral rho-shifts), so reduced 64-bit fractions with 128-bit
/// cross multiplication never overflow in practice.
class Rat {
 public:
  Rat() = default;
  Rat(long long num) : num_(num) {}  // NOLINT: integers convert freely
  Rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_); }
  Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw invalid_input("division by zero rational");
    return Rat(num_ * o.den_, den_ * o.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
  }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  /// "p" for integers, "p/q" otherwise; q is always positive.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rat parse(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational");
    auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        long long p = std::stoll(text, &used);
        if (used != text.size()) throw invalid_input("bad rational: " + text);
        return Rat(p);
      }
      long long p = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw invalid_input("bad rational: " + text);
      std::string denpart = text.substr(slash + 1);
      long long q = std::stoll(denpart, &used);
      if (used != denpart.size()) throw invalid_input("bad rational: " + text);
      return Rat(p, q);
    } catch (const std::logic_error&) {
      throw invalid_input("bad rational: " + text);
    }
  }

 private:
  void normalize() {
    if (den_ == 0) throw invalid_input("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rat half(long long n) { return Rat(n, 2); }

inline std::string to_string(const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out;
}

}  // namespace avsocle

#ifndef GROUPOIDAL_EXACT_HPP_
#define GROUPOIDAL_EXACT_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "groupoidal/errors.hpp"

namespace groupoidal {

// Exact rationals in canonical lowest terms with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt rational_den(const Rational& q) {
  return boost::multiprecision::denominator(q);
}
inline bool is_zero(const Rational& q) { return q == 0; }
inline Rational field_inverse(const Rational& q) {
  if (q == 0) throw ValidationError("division by zero");
  return 1 / q;
}

// An element of GF(p). Elements constructed from plain integer literals
// carry modulus 0 and join the modulus of whatever they meet; this lets
// generic matrix code write F(0) and F(1).
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v) : v_(v), p_(0) {}  // NOLINT: implicit by design
  Fp(long long v, uint32_t p) : p_(p) {
    if (p == 0) throw ValidationError("modulus must be positive");
    v_ = v % static_cast<long long>(p);
    if (v_ < 0) v_ += p;
  }

  uint32_t modulus() const { return p_; }
  long long value() const { return v_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto [x, y, p] = Fp::join(a, b);
    return p == 0 ? Fp(x + y) : Fp(x + y, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto [x, y, p] = Fp::join(a, b);
    return p == 0 ? Fp(x - y) : Fp(x - y, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto [x, y, p] = Fp::join(a, b);
    return p == 0 ? Fp(x * y) : Fp(x * y, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * field_inverse(b); }
  Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(-v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto [x, y, p] = Fp::join(a, b);
    return x == y;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend Fp field_inverse(const Fp& a) {
    if (a.p_ == 0) {
      if (a.v_ == 1 || a.v_ == -1) return a;
      throw ValidationError("inverse of an integer-state Fp without modulus");
    }
    if (a.v_ == 0) throw ValidationError("division by zero in GF(p)");
    // extended Euclid
    long long t = 0, nt = 1, r = a.p_, nr = a.v_;
    while (nr != 0) {
      const long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return Fp(t, a.p_);
  }
  friend bool is_zero(const Fp& a) {
    return a.p_ == 0 ? a.v_ == 0 : a.v_ % a.p_ == 0;
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  struct Joined {
    long long x, y;
    uint32_t p;
  };
  static Joined join(const Fp& a, const Fp& b) {
    uint32_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_ && a.p_ != b.p_) {
      throw ValidationError("mixing different prime fields");
    }
    if (p == 0) return {a.v_, b.v_, 0};
    auto red = [&](long long v) {
      v %= static_cast<long long>(p);
      return v < 0 ? v + p : v;
    };
    return {red(a.v_), red(b.v_), p};
  }

  long long v_;
  uint32_t p_;
};

inline bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Reduce a rational mod p; requires p coprime to the denominator.
inline Fp reduce_mod(const Rational& q, uint32_t p) {
  const BigInt num = rational_num(q) % p;
  const BigInt den = rational_den(q) % p;
  if (den == 0) {
    throw ValidationError("denominator not invertible mod " + std::to_string(p));
  }
  const Fp n(static_cast<long long>(num), p);
  const Fp d(static_cast<long long>(den), p);
  return n / d;
}

}  // namespace groupoidal

#endif  // GROUPOIDAL_EXACT_HPP_

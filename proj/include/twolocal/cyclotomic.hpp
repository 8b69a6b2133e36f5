#pragma once

/// @file cyclotomic.hpp
/// Exact arithmetic in the 2-power cyclotomic fields Q(zeta), zeta a primitive
/// 2^m-th root of unity. Numbers are coefficient vectors over the power basis
/// {zeta^0, ..., zeta^(2^(m-1) - 1)}; reduction uses zeta^(2^(m-1)) = -1.
/// The basis is a Q-basis of the field, so equality is coefficient-wise.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twolocal {

/// Raised when a cyclotomic modulus is too small to represent a value exactly.
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a search or closure exceeds its configured budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a required mathematical check fails; carries the check name.
struct verification_error : std::runtime_error {
  std::string check;
  explicit verification_error(const std::string& name)
      : std::runtime_error("verification failed: " + name), check(name) {}
};

// ============================================================================
// Rational
// ============================================================================

/// Exact rational number, always normalized: den > 0, gcd(|num|, den) = 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  [[nodiscard]] bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }

  [[nodiscard]] std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// ============================================================================
// CycNumber
// ============================================================================

/// Element of Q(zeta_{2^m}) as a coefficient vector of length 2^(m-1).
/// Invariants: arithmetic is reduced with zeta^(2^(m-1)) = -1; complex
/// conjugation sends zeta to zeta^(-1); equality is coefficient-wise.
struct CycNumber {
  int m = 1;                 // zeta is a primitive 2^m-th root of unity
  std::vector<Rational> c;   // coefficients of zeta^0 .. zeta^(2^(m-1)-1)

  CycNumber() : c(1) {}
  explicit CycNumber(int modulus) : m(modulus), c(half_of(modulus)) {}

  static int half_of(int modulus) {
    if (modulus < 1 || modulus > 16)
      throw std::domain_error("CycNumber: modulus out of range");
    return 1 << (modulus - 1);
  }
  [[nodiscard]] int half() const { return static_cast<int>(c.size()); }

  static CycNumber zero(int m) { return CycNumber(m); }
  static CycNumber one(int m) {
    CycNumber z(m);
    z.c[0] = Rational(1);
    return z;
  }
  static CycNumber from_rational(int m, const Rational& r) {
    CycNumber z(m);
    z.c[0] = r;
    return z;
  }

  /// zeta^e for any integer e (reduced mod 2^m, sign via zeta^half = -1).
  static CycNumber zeta_pow(int m, long long e) {
    CycNumber z(m);
    long long full = 2LL << (m - 1);
    e %= full;
    if (e < 0) e += full;
    // half() is a power of two, so e mod half() is a mask; the high range
    // carries the sign flip from zeta^half = -1.
    z.c[static_cast<size_t>(e & (z.half() - 1))] =
        e < z.half() ? Rational(1) : Rational(-1);
    return z;
  }

  /// The imaginary unit i = zeta^(2^(m-2)); needs m >= 2.
  static CycNumber i_unit(int m) {
    if (m < 2) throw precision_error("CycNumber: i needs modulus >= 2");
    return zeta_pow(m, 1LL << (m - 2));
  }

  /// sqrt(2) = zeta_8 + zeta_8^(-1); needs m >= 3.
  static CycNumber sqrt2(int m) {
    if (m < 3) throw precision_error("CycNumber: sqrt(2) needs modulus >= 3");
    long long e8 = 1LL << (m - 3);  // zeta^(e8) is a primitive 8th root
    return zeta_pow(m, e8) + zeta_pow(m, -e8);
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    a.require_same(b);
    CycNumber r(a.m);
    for (int k = 0; k < a.half(); ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    a.require_same(b);
    CycNumber r(a.m);
    for (int k = 0; k < a.half(); ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  CycNumber operator-() const {
    CycNumber r(m);
    for (int k = 0; k < half(); ++k) r.c[k] = -c[k];
    return r;
  }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    a.require_same(b);
    CycNumber r(a.m);
    int h = a.half();
    for (int i = 0; i < h; ++i) {
      if (a.c[i].is_zero()) continue;
      for (int j = 0; j < h; ++j) {
        if (b.c[j].is_zero()) continue;
        Rational p = a.c[i] * b.c[j];
        int e = i + j;
        if (e >= h) {
          r.c[e - h] = r.c[e - h] - p;  // zeta^h = -1
        } else {
          r.c[e] = r.c[e] + p;
        }
      }
    }
    return r;
  }

  [[nodiscard]] CycNumber scaled(const Rational& r) const {
    CycNumber z(m);
    for (int k = 0; k < half(); ++k) z.c[k] = c[k] * r;
    return z;
  }

  /// Complex conjugation: zeta^k -> zeta^(-k).
  [[nodiscard]] CycNumber conj() const {
    CycNumber r(m);
    r.c[0] = c[0];
    for (int k = 1; k < half(); ++k) {
      // zeta^(-k) = -zeta^(h-k)
      r.c[half() - k] = r.c[half() - k] - c[k];
    }
    return r;
  }

  /// |z|^2 = z * conj(z), always in the real subfield.
  [[nodiscard]] CycNumber norm2() const { return (*this) * conj(); }

  /// Re-express in Q(zeta_{2^m2}) for m2 >= m (zeta_m = zeta_m2^(2^(m2-m))).
  [[nodiscard]] CycNumber promote(int m2) const {
    if (m2 < m) throw precision_error("CycNumber: cannot demote modulus");
    if (m2 == m) return *this;
    CycNumber r(m2);
    long long step = 1LL << (m2 - m);
    for (int k = 0; k < half(); ++k) {
      if (c[k].is_zero()) continue;
      CycNumber t = zeta_pow(m2, step * k).scaled(c[k]);
      r = r + t;
    }
    return r;
  }

  /// The rational value if the number lies in Q, otherwise nullopt-like throw.
  [[nodiscard]] bool is_rational() const {
    for (int k = 1; k < half(); ++k)
      if (!c[k].is_zero()) return false;
    return true;
  }
  [[nodiscard]] Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNumber: not rational");
    return c[0];
  }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.m == b.m && a.c == b.c;
  }
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }
  friend bool operator<(const CycNumber& a, const CycNumber& b) {
    if (a.m != b.m) return a.m < b.m;
    for (int k = 0; k < a.half(); ++k) {
      if (a.c[k] != b.c[k]) return a.c[k] < b.c[k];
    }
    return false;
  }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (int k = 0; k < half(); ++k) {
      if (c[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += c[k].str();
      if (k > 0) s += "*z^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void require_same(const CycNumber& b) const {
    if (m != b.m)
      throw precision_error("CycNumber: mixed moduli (promote first)");
  }
};

}  // namespace twolocal

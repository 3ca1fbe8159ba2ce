#pragma once

#include "crossgeo/error.hpp"

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace crossgeo {

// Exact rational on 64-bit words, canonical form (reduced, positive denominator).
// All invariant computations go through this type; there is no floating point
// anywhere in the core.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_, unchecked_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(add_mul(a.num_, b.den_, b.num_, a.den_), mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mul(a.num_, b.num_), mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(ErrorCode::Internal, "rational division by zero");
        return Rational(mul(a.num_, b.den_), mul(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const { return -(-*this).floor(); }

    // Exact integer value; the caller asserts integrality.
    long long as_integer() const {
        if (den_ != 1) fail(ErrorCode::Internal, "expected integer, got " + str());
        return num_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    struct unchecked_tag {};
    Rational(long long n, long long d, unchecked_tag) : num_(n), den_(d) {}

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Internal, "rational overflow");
        return (long long)v;
    }
    static long long mul(long long a, long long b) { return checked((__int128)a * b); }
    static long long add_mul(long long a, long long b, long long c, long long d) {
        return checked((__int128)a * b + (__int128)c * d);
    }

    void normalize() {
        if (den_ == 0) fail(ErrorCode::Internal, "rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace crossgeo

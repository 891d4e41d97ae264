#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace isoform {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow in multiplication");
    return r;
}

} // namespace detail

// Exact rational number over checked 64-bit integers. Normalized so that
// the denominator is positive and gcd(|num|, den) == 1. All coordinates in
// this library are tiny (half-integers and small sums thereof), so 64 bits
// with overflow checks is ample.
class Rat {
public:
    constexpr Rat() = default;
    Rat(long long n) : num_(n) {}
    Rat(int n) : num_(n) {}

    Rat(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    // Value as a plain integer; requires is_integer().
    long long as_integer() const {
        if (den_ != 1) throw std::domain_error("rational " + to_string() + " is not an integer");
        return num_;
    }

    Rat operator-() const {
        Rat r;
        r.num_ = detail::checked_sub(0, num_);
        r.den_ = den_;
        return r;
    }

    Rat operator+(const Rat& o) const {
        using detail::checked_add;
        using detail::checked_mul;
        long long g = std::gcd(den_, o.den_);
        long long lhs = checked_mul(num_, o.den_ / g);
        long long rhs = checked_mul(o.num_, den_ / g);
        return Rat(checked_add(lhs, rhs), checked_mul(den_ / g, o.den_));
    }

    Rat operator-(const Rat& o) const { return *this + (-o); }

    Rat operator*(const Rat& o) const {
        using detail::checked_mul;
        long long g1 = std::gcd(std::llabs(num_), o.den_);
        long long g2 = std::gcd(std::llabs(o.num_), den_);
        Rat r;
        r.num_ = checked_mul(num_ / g1, o.num_ / g2);
        r.den_ = checked_mul(den_ / g2, o.den_ / g1);
        return r;
    }

    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return *this * Rat(o.den_, o.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    bool operator<(const Rat& o) const {
        // Denominators are positive, so cross-multiplication preserves order.
        return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = detail::checked_sub(0, num_);
            den_ = detail::checked_sub(0, den_);
        }
        long long g = std::gcd(std::llabs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

} // namespace isoform

template <>
struct std::hash<isoform::Rat> {
    size_t operator()(const isoform::Rat& r) const noexcept {
        size_t h = std::hash<long long>{}(r.num());
        h ^= std::hash<long long>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

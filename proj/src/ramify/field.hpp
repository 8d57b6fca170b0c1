#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "ramify/errors.hpp"

namespace ramify {

// Exact arbitrary-precision rational, the default coefficient field.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Prime field GF(p) for the optional fast mode.  The modulus is per-thread
// state installed by ZpScope around a computation; Zp values themselves are
// plain residues so they can live inside generic sparse containers.
class Zp {
public:
    Zp() : v_(0) {}
    explicit Zp(std::int64_t x) {
        const std::int64_t p = modulus();
        v_ = static_cast<std::uint32_t>(((x % p) + p) % p);
    }

    static std::int64_t modulus();

    bool is_zero() const { return v_ == 0; }

    Zp operator-() const { return from_raw(v_ == 0 ? 0 : static_cast<std::uint32_t>(modulus() - v_)); }

    Zp& operator+=(const Zp& o) {
        std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
        const auto p = static_cast<std::uint64_t>(modulus());
        if (s >= p) s -= p;
        v_ = static_cast<std::uint32_t>(s);
        return *this;
    }
    Zp& operator-=(const Zp& o) { return *this += (-o); }
    Zp& operator*=(const Zp& o) {
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % static_cast<std::uint64_t>(modulus()));
        return *this;
    }
    Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Zp& a, const Zp& b) { return a.v_ != b.v_; }

    Zp inverse() const {
        if (v_ == 0) throw InvalidArgumentError("division by zero in GF(p)");
        // Fermat: v^(p-2) mod p.
        std::uint64_t base = v_, acc = 1;
        const auto p = static_cast<std::uint64_t>(modulus());
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return from_raw(static_cast<std::uint32_t>(acc));
    }

    std::uint32_t raw() const { return v_; }

private:
    static Zp from_raw(std::uint32_t r) {
        Zp z;
        z.v_ = r;
        return z;
    }
    std::uint32_t v_;
};

// RAII installer for the GF(p) modulus of the current thread.
class ZpScope {
public:
    explicit ZpScope(std::int64_t p);
    ~ZpScope();
    ZpScope(const ZpScope&) = delete;
    ZpScope& operator=(const ZpScope&) = delete;

private:
    std::int64_t saved_;
};

// Runtime selection between the two coefficient fields.
struct FieldSpec {
    std::int64_t prime = 0;  // 0 = rationals, otherwise a prime for GF(p)
    bool is_rational() const { return prime == 0; }
};

bool is_prime(std::int64_t p);
void validate_field(const FieldSpec& f);

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(std::int64_t x) { return Rational(x); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static std::string numerator_str(const Rational& x) { return boost::multiprecision::numerator(x).str(); }
    static std::string denominator_str(const Rational& x) { return boost::multiprecision::denominator(x).str(); }
};

template <>
struct FieldOps<Zp> {
    static Zp zero() { return Zp(); }
    static Zp one() { return Zp(1); }
    static Zp from_int(std::int64_t x) { return Zp(x); }
    static bool is_zero(const Zp& x) { return x.is_zero(); }
    static std::string numerator_str(const Zp& x) { return std::to_string(x.raw()); }
    static std::string denominator_str(const Zp&) { return "1"; }
};

}  // namespace ramify

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sepkit {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values live in different fields (Q vs GF(p), or different p).
struct field_mismatch : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

// Finite enumeration would exceed the caller's limit.
struct limit_exceeded : error {
    using error::error;
};

// A complete search was requested over Q.
struct infinite_field : error {
    using error::error;
};

// A constructed object failed its own axioms (internal bug, not user error).
struct axiom_failure : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact rationals (arbitrary precision, always in lowest terms).

class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long n) : v_(n) {}
    explicit Rational(rep v) : v_(std::move(v)) {}

    static Rational from_string(const std::string& s) {
        try {
            auto slash = s.find('/');
            if (slash == std::string::npos) {
                return Rational(rep(boost::multiprecision::cpp_int(s)));
            }
            boost::multiprecision::cpp_int num(s.substr(0, slash));
            boost::multiprecision::cpp_int den(s.substr(slash + 1));
            if (den.is_zero()) throw error("division by zero");
            return Rational(rep(num) / rep(den));
        } catch (const error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("not a rational: '" + s + "'");
        }
    }

    const rep& value() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }

    Rational operator-() const { return Rational(rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    Rational inverse() const {
        if (is_zero()) throw error("inverse of zero");
        return Rational(rep(1) / v_);
    }

    std::string str() const { return v_.str(); }

private:
    rep v_;
};

// ---------------------------------------------------------------------------
// Residues mod a prime p < 2^31. Stored in [0, p); products fit in int64.

class Residue {
public:
    Residue() = default;
    Residue(std::int64_t v, std::uint32_t p) : p_(p) {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        v_ = m;
    }

    std::int64_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    Residue operator-() const { return Residue(-v_, p_); }
    Residue& operator+=(const Residue& o) { match(o); v_ = (v_ + o.v_) % p_; return *this; }
    Residue& operator-=(const Residue& o) { match(o); v_ = (v_ - o.v_ + p_) % p_; return *this; }
    Residue& operator*=(const Residue& o) { match(o); v_ = (v_ * o.v_) % p_; return *this; }
    Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
    friend bool operator==(const Residue& a, const Residue& b) {
        a.match(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

    Residue inverse() const {
        if (v_ == 0) throw error("inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Residue(x0, p_);
    }

    std::string str() const { return std::to_string(v_); }

private:
    void match(const Residue& o) const {
        if (p_ != o.p_)
            throw field_mismatch("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }

    std::int64_t v_ = 0;
    std::uint32_t p_ = 2;
};

// ---------------------------------------------------------------------------
// Field descriptors. Every structure in the library carries one by value and
// uses it to mint constants; Scalar is the element type.

struct RationalField {
    using Scalar = Rational;
    static constexpr bool is_finite = false;

    Scalar zero() const { return Rational(0); }
    Scalar one() const { return Rational(1); }
    Scalar from_integer(long n) const { return Rational(n); }
    Scalar from_string(const std::string& s) const { return Rational::from_string(s); }
    std::uint64_t order() const { throw infinite_field("Q is infinite"); }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
    friend bool operator!=(const RationalField&, const RationalField&) { return false; }
};

struct PrimeField {
    using Scalar = Residue;
    static constexpr bool is_finite = true;

    explicit PrimeField(std::uint32_t p_) : p(p_) {
        if (!is_prime(p)) throw parse_error("modulus must be prime: " + std::to_string(p));
    }

    Scalar zero() const { return Residue(0, p); }
    Scalar one() const { return Residue(1, p); }
    Scalar from_integer(long n) const { return Residue(n, p); }
    Scalar from_string(const std::string& s) const {
        try {
            // accept rationals "a/b" with b invertible mod p, so one corpus
            // syntax serves both fields
            auto slash = s.find('/');
            if (slash == std::string::npos)
                return Residue(std::stoll(s), p);
            Residue num(std::stoll(s.substr(0, slash)), p);
            Residue den(std::stoll(s.substr(slash + 1)), p);
            return num / den;
        } catch (const error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("not a residue: '" + s + "'");
        }
    }
    std::uint64_t order() const { return p; }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p != b.p; }

    std::uint32_t p;
};

template <class F>
std::string scalar_str(const typename F::Scalar& s) {
    return s.str();
}

}  // namespace sepkit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dy {

using BigInt = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "n" or "n/d" (optional leading '-').
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(text));
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::exception&) {
            throw Error("cannot parse rational from '" + text + "'");
        }
    }

  private:
    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

/// The field of rational numbers.
struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Rational(); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw Error("inverse of zero");
        return Rational(1) / a;
    }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_long(long long v) const { return Rational(v); }
    Elem parse(const std::string& s) const { return Rational::parse(s); }
    std::string str(const Elem& a) const { return a.str(); }
    long long characteristic() const { return 0; }
    std::string name() const { return "Q"; }
};

/// The prime field F_p for p < 2^31; elements are residues in [0, p).
struct PrimeField {
    using Elem = std::uint64_t;

    PrimeField() : p(2) {}
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (p < 2 || p >= (1ull << 31) || !is_prime(p))
            throw Error("prime field characteristic must be a prime in [2, 2^31)");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("inverse of zero");
        // extended Euclid on (a, p)
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<long long>(p);
        return static_cast<Elem>(t);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem from_long(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return static_cast<Elem>(m);
    }
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return from_bigint(BigInt(s));
            return mul(from_bigint(BigInt(s.substr(0, slash))),
                       inv(from_bigint(BigInt(s.substr(slash + 1)))));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error("cannot parse field element from '" + s + "'");
        }
    }
    std::string str(Elem a) const { return std::to_string(a); }
    long long characteristic() const { return static_cast<long long>(p); }
    std::string name() const { return "F" + std::to_string(p); }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t p;

  private:
    Elem from_bigint(const BigInt& v) const {
        BigInt m = v % p;
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
};

template <class F>
concept Field = requires(const F k, const typename F::Elem a, const typename F::Elem b) {
    { k.zero() } -> std::same_as<typename F::Elem>;
    { k.one() } -> std::same_as<typename F::Elem>;
    { k.add(a, b) } -> std::same_as<typename F::Elem>;
    { k.sub(a, b) } -> std::same_as<typename F::Elem>;
    { k.mul(a, b) } -> std::same_as<typename F::Elem>;
    { k.neg(a) } -> std::same_as<typename F::Elem>;
    { k.inv(a) } -> std::same_as<typename F::Elem>;
    { k.is_zero(a) } -> std::same_as<bool>;
    { k.eq(a, b) } -> std::same_as<bool>;
    { k.from_long(0LL) } -> std::same_as<typename F::Elem>;
    { k.str(a) } -> std::same_as<std::string>;
    { k.characteristic() } -> std::same_as<long long>;
};

}  // namespace dy

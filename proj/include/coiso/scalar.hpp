#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace coiso {

/// Exact rational scalar backed by GMP. All arithmetic is exact; division by
/// zero throws std::domain_error instead of aborting.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rat parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        if (v.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
        v.canonicalize();
        return Rat(std::move(v));
    }

    std::string str() const { return v_.get_str(); }
    bool is_zero() const { return v_ == 0; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

private:
    mpq_class v_;
};

/// Prime-field scalar. The modulus is process-wide and set once per run
/// (one workspace per invocation); elements store the canonical residue.
class Fp {
public:
    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p >= (1ull << 31) || !is_prime(p))
            throw std::invalid_argument("modulus must be a prime below 2^31");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    Fp() = default;
    Fp(long long n) {
        long long r = n % static_cast<long long>(modulus_);
        if (r < 0) r += static_cast<long long>(modulus_);
        v_ = static_cast<std::uint64_t>(r);
    }

    static Fp parse(const std::string& s) {
        // Accepts "p/q" as well so model files stay field-agnostic.
        auto slash = s.find('/');
        if (slash == std::string::npos) return Fp(std::stoll(s));
        Fp num(std::stoll(s.substr(0, slash)));
        Fp den(std::stoll(s.substr(slash + 1)));
        return num / den;
    }

    std::string str() const { return std::to_string(v_); }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
    Fp& operator+=(const Fp& o) { v_ += o.v_; if (v_ >= modulus_) v_ -= modulus_; return *this; }
    Fp& operator-=(const Fp& o) { v_ += modulus_ - o.v_; if (v_ >= modulus_) v_ -= modulus_; return *this; }
    Fp& operator*=(const Fp& o) { v_ = (v_ * o.v_) % modulus_; return *this; }
    Fp& operator/=(const Fp& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return *this *= o.inverse();
    }

    Fp inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return pow(modulus_ - 2);
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

private:
    static Fp raw(std::uint64_t v) { Fp x; x.v_ = v; return x; }
    Fp pow(std::uint64_t e) const {
        Fp base = *this, acc = Fp(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    static bool is_prime(std::uint64_t p) {
        if (p % 2 == 0) return p == 2;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

    std::uint64_t v_ = 0;
    inline static std::uint64_t modulus_ = 2;
};

template <typename K>
concept ScalarField = requires(K a, K b, const std::string& s) {
    { K() } -> std::same_as<K>;
    { K(1) };
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::same_as<bool>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
    { K::parse(s) } -> std::same_as<K>;
};

static_assert(ScalarField<Rat>);
static_assert(ScalarField<Fp>);

}  // namespace coiso

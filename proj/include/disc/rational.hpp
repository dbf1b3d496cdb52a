#pragma once

// Exact rational scalar backed by GMP. Every coordinate, volume and
// discrepancy value in the library is a Rational; there is no floating point
// on any solver path.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace disc {

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>)
            q_ = mpq_class(mpz_class(static_cast<long>(value)));
        else
            q_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// num/den in canonical form. Throws std::domain_error on a zero denominator.
    static Rational make(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0)
            throw std::domain_error("division by zero");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    /// Parses "p/q" or "p". Decimal or exponent notation is refused so that
    /// values cannot silently pass through a floating point representation.
    static Rational parse(std::string_view text)
    {
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (!s.empty() && allow_sign && s.front() == '-')
                s.remove_prefix(1);
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "' (expected p/q)");
        return make(mpz_class(std::string(num)), mpz_class(std::string(den)));
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Smallest integer >= this.
    mpz_class ceil() const
    {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    std::string str() const
    {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.sign() == 0)
            throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.q_, b.q_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline Rational rat_make(const mpz_class& num, const mpz_class& den) { return Rational::make(num, den); }

inline std::strong_ordering rat_cmp(const Rational& a, const Rational& b) { return a <=> b; }

/// x^e by repeated squaring; rat_pow(x, 0) == 1.
inline Rational rat_pow(const Rational& x, long e)
{
    if (e < 0)
        throw std::domain_error("negative exponent");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational::make(num, den);
}

inline Rational reciprocal(const Rational& x) { return Rational(1) / x; }

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

} // namespace disc

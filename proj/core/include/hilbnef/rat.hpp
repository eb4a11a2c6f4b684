#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbnef {

using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Thin wrapper over GMP's mpq_class that guarantees the
/// canonical form at every construction site.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(const Int& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    // Accept GMP integer expression templates without ambiguity.
    template <typename E>
    Rat(const __gmp_expr<mpz_t, E>& e) : v_(mpz_class(e)) {}  // NOLINT
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    /// Accepts "p" or "p/q" with optional sign.
    static Rat parse(std::string_view s);

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Integer value; throws unless the denominator is 1.
    Int to_int() const {
        if (!is_integer()) throw std::domain_error("Rat: not an integer: " + str());
        return v_.get_num();
    }

    Rat abs() const { return Rat(::abs(v_)); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

    double to_double() const { return v_.get_d(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // canonical by construction
};

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Rat Rat::parse(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
        Int num(std::string(s.substr(0, slash)));
        Int den(std::string(s.substr(slash + 1)));
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse '" + std::string(s) + "'");
    }
}

}  // namespace hilbnef

#pragma once

#include <utility>

#include "hilbnef/rat.hpp"

namespace hilbnef {

/// Closed rational interval [lo, hi] used as a certified enclosure of a
/// real number. Every operation returns an interval containing the true
/// value of the corresponding real operation.
struct RatInterval {
    Rat lo, hi;

    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / Rat(2); }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool disjoint_from(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval scaled(const Rat& c) const {
        return c.sign() >= 0 ? RatInterval(lo * c, hi * c) : RatInterval(hi * c, lo * c);
    }
    RatInterval shifted(const Rat& c) const { return {lo + c, hi + c}; }
};

/// Certified enclosure of sqrt(m) of width at most `width`, by bisection
/// on t^2 - m from integer square-root bounds. Postcondition (asserted):
/// lo^2 <= m <= hi^2 and lo >= 0.
RatInterval root_enclosure(const Int& m, const Rat& width);

/// Element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)), with d a
/// positive non-square integer fixed per value and the real embedding
/// sqrt(d) > 0. All arithmetic and sign determination is exact.
class QuadNum {
public:
    explicit QuadNum(Int d) : QuadNum(std::move(d), Rat(0), Rat(0)) {}
    QuadNum(Int d, Rat p, Rat q);

    static QuadNum sqrt_of(const Int& d) { return QuadNum(d, Rat(0), Rat(1)); }

    const Int& radicand() const { return d_; }
    const Rat& rat_part() const { return p_; }
    const Rat& root_part() const { return q_; }

    bool is_rational() const { return q_.is_zero(); }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    /// Exact sign of the real number p + q*sqrt(d), by case analysis on
    /// the signs of p and q and comparison of p^2 with q^2 d.
    int sign() const;

    QuadNum conj() const { return QuadNum(d_, p_, -q_); }
    Rat norm() const { return p_ * p_ - q_ * q_ * Rat(d_); }

    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator/(const QuadNum& o) const;
    QuadNum operator-() const { return QuadNum(d_, -p_, -q_); }

    QuadNum operator+(const Rat& r) const { return QuadNum(d_, p_ + r, q_); }
    QuadNum operator-(const Rat& r) const { return QuadNum(d_, p_ - r, q_); }
    QuadNum operator*(const Rat& r) const { return QuadNum(d_, p_ * r, q_ * r); }
    QuadNum operator/(const Rat& r) const;

    QuadNum pow(unsigned e) const;

    bool operator==(const QuadNum& o) const {
        check_same_field(o);
        return p_ == o.p_ && q_ == o.q_;
    }
    bool operator<(const QuadNum& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadNum& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadNum& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadNum& o) const { return (*this - o).sign() >= 0; }

    /// Enclosure of the real value with width at most `width`
    /// (defaults to 1e-12, far below any gap met at desk scale).
    RatInterval enclosure(const Rat& width = Rat(Int(1), Int(1000000000000L))) const;

    std::string str() const;

private:
    void check_same_field(const QuadNum& o) const {
        if (d_ != o.d_)
            throw std::invalid_argument("QuadNum: radicand mismatch: " + d_.get_str() +
                                        " vs " + o.d_.get_str());
    }

    Int d_;
    Rat p_, q_;
};

/// Compares two quadratic numbers that may live over different radicands,
/// by refining rational enclosures until they separate. Values that are
/// equal as algebraic numbers are not handled here; after `max_refine`
/// halvings without separation this throws.
int compare_via_enclosure(const QuadNum& x, const QuadNum& y, int max_refine = 128);

}  // namespace hilbnef

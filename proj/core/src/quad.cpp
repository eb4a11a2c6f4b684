#include "hilbnef/quad.hpp"

namespace hilbnef {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < mn) mn = *v;
        if (*v > mx) mx = *v;
    }
    return {mn, mx};
}

RatInterval root_enclosure(const Int& m, const Rat& width) {
    if (m <= 0) throw std::domain_error("root_enclosure: m must be positive");
    if (width.sign() <= 0) throw std::domain_error("root_enclosure: width must be positive");
    Int r = isqrt_floor(m);
    if (r * r == m) return RatInterval::point(Rat(r));
    Rat lo{r}, hi{r + 1};
    Rat mm{m};
    while (hi - lo > width) {
        Rat mid = (lo + hi) / Rat(2);
        if (mid * mid <= mm)
            lo = mid;
        else
            hi = mid;
    }
    if (!(lo * lo <= mm && mm <= hi * hi))
        throw std::logic_error("root_enclosure: postcondition violated");
    return {lo, hi};
}

QuadNum::QuadNum(Int d, Rat p, Rat q) : d_(std::move(d)), p_(std::move(p)), q_(std::move(q)) {
    if (d_ <= 0) throw std::invalid_argument("QuadNum: radicand must be positive");
    if (is_perfect_square(d_))
        throw std::invalid_argument("QuadNum: radicand " + d_.get_str() + " is a perfect square");
}

int QuadNum::sign() const {
    int sp = p_.sign(), sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: |p| vs |q| sqrt(d) decides, via squares.
    Rat lhs = p_ * p_, rhs = q_ * q_ * Rat(d_);
    if (lhs == rhs) return 0;  // cannot happen for non-square d, kept for totality
    return lhs > rhs ? sp : sq;
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
    check_same_field(o);
    return QuadNum(d_, p_ + o.p_, q_ + o.q_);
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
    check_same_field(o);
    return QuadNum(d_, p_ - o.p_, q_ - o.q_);
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
    check_same_field(o);
    return QuadNum(d_, p_ * o.p_ + q_ * o.q_ * Rat(d_), p_ * o.q_ + q_ * o.p_);
}

QuadNum QuadNum::operator/(const QuadNum& o) const {
    check_same_field(o);
    if (o.is_zero()) throw std::domain_error("QuadNum: division by zero");
    // Multiply by the conjugate; the norm p^2 - q^2 d is nonzero for o != 0.
    Rat n = o.norm();
    QuadNum t = *this * o.conj();
    return QuadNum(d_, t.p_ / n, t.q_ / n);
}

QuadNum QuadNum::operator/(const Rat& r) const {
    if (r.is_zero()) throw std::domain_error("QuadNum: division by zero");
    return QuadNum(d_, p_ / r, q_ / r);
}

QuadNum QuadNum::pow(unsigned e) const {
    QuadNum acc(d_, Rat(1), Rat(0));
    QuadNum base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

RatInterval QuadNum::enclosure(const Rat& width) const {
    if (q_.is_zero()) return RatInterval::point(p_);
    // p + q*[lo,hi] with the root enclosure tightened so the scaled width fits.
    Rat root_w = width / q_.abs();
    RatInterval root = root_enclosure(d_, root_w);
    return root.scaled(q_).shifted(p_);
}

std::string QuadNum::str() const {
    if (q_.is_zero()) return p_.str();
    std::string s;
    if (!p_.is_zero()) s += p_.str() + (q_.sign() > 0 ? " + " : " - ");
    else if (q_.sign() < 0) s += "-";
    Rat aq = q_.abs();
    if (!(aq == Rat(1))) s += aq.str() + "*";
    s += "sqrt(" + d_.get_str() + ")";
    return s;
}

int compare_via_enclosure(const QuadNum& x, const QuadNum& y, int max_refine) {
    if (x.radicand() == y.radicand()) return (x - y).sign();
    Rat w(1);
    for (int i = 0; i < max_refine; ++i) {
        RatInterval ix = x.enclosure(w), iy = y.enclosure(w);
        if (ix.disjoint_from(iy)) return ix.hi < iy.lo ? -1 : 1;
        w = w / Rat(2);
    }
    throw std::runtime_error(
        "compare_via_enclosure: values did not separate (possibly equal algebraic numbers)");
}

}  // namespace hilbnef

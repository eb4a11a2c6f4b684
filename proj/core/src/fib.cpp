#include "hilbnef/fib.hpp"

#include <stdexcept>

namespace hilbnef {

FibSeq::FibSeq(long a) : a_(a) {
    if (a < 1) throw std::invalid_argument("FibSeq: parameter a must be >= 1");
    memo_ = {Int(0), Int(1)};
}

Int FibSeq::at(long m) const {
    bool flip = false;
    if (m < 0) {
        // a_{-m} = (-1)^{m+1} a_m
        flip = (m % 2) == 0;  // m negative even => sign -1
        m = -m;
    }
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(memo_.size()) <= m) {
        size_t k = memo_.size();
        memo_.push_back(Int(a_) * memo_[k - 1] + memo_[k - 2]);
    }
    return flip ? Int(-memo_[m]) : memo_[m];
}

Int fib(long a, long m) { return FibSeq(a).at(m); }

std::pair<QuadNum, QuadNum> quadratic_roots(long a) {
    if (a < 1) throw std::invalid_argument("quadratic_roots: a must be >= 1");
    Int d = Int(a) * Int(a) + 4;
    Rat half(1, 2), ha(Int(a), Int(2));
    QuadNum alpha(d, ha, -half);
    QuadNum beta(d, ha, half);
    if (!(alpha.sign() < 0 && beta.sign() > 0))
        throw std::logic_error("quadratic_roots: sign check failed");
    return {alpha, beta};
}

}  // namespace hilbnef

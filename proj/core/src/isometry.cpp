#include "hilbnef/isometry.hpp"

namespace hilbnef {

Isometry::Isometry(Mat3r m, Params par) : mat_(std::move(m)), par_(par) {
    if (!is_isometry(mat_, par_))
        throw std::invalid_argument("Isometry: matrix does not preserve the BBF Gram matrix");
    Rat d = mat_.det();
    if (!(d == Rat(1) || d == Rat(-1)))
        throw std::invalid_argument("Isometry: determinant is not +-1");
}

bool is_isometry(const Mat3r& m, const Params& par) {
    Mat3r g = gram_matrix(par);
    return m.transpose() * g * m == g;
}

DivClass Isometry::apply(const DivClass& p) const {
    if (!(p.par == par_)) throw std::invalid_argument("Isometry::apply: parameter mismatch");
    Vec3r v = mat_ * p.coords();
    return {v[0], v[1], v[2], par_};
}

DivClassQ Isometry::apply(const DivClassQ& p) const {
    if (!(p.par == par_)) throw std::invalid_argument("Isometry::apply: parameter mismatch");
    auto row = [&](int i) {
        return p.x * mat_(i, 0) + p.y * mat_(i, 1) + p.z * mat_(i, 2);
    };
    return {row(0), row(1), row(2), par_};
}

Isometry Isometry::compose(const Isometry& rhs) const {
    if (!(rhs.par_ == par_)) throw std::invalid_argument("Isometry::compose: parameter mismatch");
    return {mat_ * rhs.mat_, par_};
}

Isometry Isometry::inverse() const { return {mat_.inverse(), par_}; }

Isometry Isometry::power(long k) const {
    Isometry base = k >= 0 ? *this : inverse();
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    Isometry acc{Mat3r::identity(), par_};
    while (e > 0) {
        if (e & 1ul) acc = acc.compose(base);
        base = base.compose(base);
        e >>= 1ul;
    }
    return acc;
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] < 1 || letters_[i] > 3)
            throw std::invalid_argument("Word: letters must be 1, 2 or 3");
        if (i > 0 && letters_[i] == letters_[i - 1])
            throw std::invalid_argument("Word: not reduced (adjacent equal letters)");
    }
}

Word Word::reduced(std::span<const int> letters) {
    std::vector<int> out;
    for (int l : letters) {
        if (l < 1 || l > 3) throw std::invalid_argument("Word: letters must be 1, 2 or 3");
        if (!out.empty() && out.back() == l)
            out.pop_back();
        else
            out.push_back(l);
    }
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word Word::reversed() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
}

std::string Word::str() const {
    std::string s;
    for (int l : letters_) {
        if (!s.empty()) s += '.';
        s += 'A';
        s += static_cast<char>('0' + l);
    }
    return s.empty() ? "id" : s;
}

Isometry beauville_reflection(const DivClass& D) {
    if (D.par.n != 2)
        throw std::invalid_argument("beauville_reflection: defined on Hilbert squares (n = 2)");
    if (!D.is_integral())
        throw std::invalid_argument("beauville_reflection: D must be integral");
    if (!(bbf_q(D) == Rat(2)))
        throw std::invalid_argument("beauville_reflection: q(D) must be 2, got " + bbf_q(D).str());
    // Column j is the image of the j-th basis vector b: -b + (b, D) D.
    Mat3r m;
    const DivClass basis[3] = {h1_class(D.par), e_class(D.par), h2_class(D.par)};
    for (int j = 0; j < 3; ++j) {
        Rat c = bbf_pair(basis[j], D);
        DivClass img = D.scaled(c) - basis[j];
        Vec3r v = img.coords();
        for (int i = 0; i < 3; ++i) m(i, j) = v[i];
    }
    return {m, D.par};
}

Isometry shift_P(long a, long n) {
    Params par(a, n);
    Mat3r m = Mat3r::identity();
    m(0, 2) = Rat(a);
    m(2, 0) = Rat(a);
    m(2, 2) = Rat(a * a + 1);
    return {m, par};
}

Isometry iota_k(long a, long k) {
    Params par(a, 2);
    Isometry iota0 = beauville_reflection(h1_class(par) - e_class(par));
    if (k == 0) return iota0;
    Isometry pk = shift_P(a, 2).power(k);
    return pk.compose(iota0).compose(pk.inverse());
}

const Isometry& GeneratorsA::at(int letter) const {
    switch (letter) {
        case 1: return A1;
        case 2: return A2;
        case 3: return A3;
        default: throw std::invalid_argument("GeneratorsA: letter out of range");
    }
}

const GeneratorsA& generators_A(long a) {
    if (a != 1)
        throw std::invalid_argument("generators_A: the generator presentation is for a = 1");
    static const GeneratorsA gens = [] {
        Isometry a1 = iota_k(1, 1);
        Isometry a2 = iota_k(1, 0);
        Isometry a3 = iota_k(1, 1).compose(iota_k(1, 2)).compose(iota_k(1, 1));
        return GeneratorsA{a1, a2, a3};
    }();
    return gens;
}

DivClass apply_word(const Word& w, const DivClass& p) {
    const GeneratorsA& g = generators_A(1);
    DivClass cur = p;
    for (int l : w.letters()) cur = g.at(l).apply(cur);
    return cur;
}

Isometry word_isometry(const Word& w) {
    const GeneratorsA& g = generators_A(1);
    Isometry acc{Mat3r::identity(), Params(1, 2)};
    for (int l : w.letters()) acc = g.at(l).compose(acc);
    return acc;
}

std::vector<Word> reduced_words_of_length(int len) {
    std::vector<Word> out;
    if (len < 0) return out;
    if (len == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::vector<int>> frontier;
    for (int l = 1; l <= 3; ++l) frontier.push_back({l});
    for (int i = 1; i < len; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int l = 1; l <= 3; ++l)
                if (l != w.back()) {
                    auto nw = w;
                    nw.push_back(l);
                    next.push_back(std::move(nw));
                }
        frontier = std::move(next);
    }
    out.reserve(frontier.size());
    for (auto& w : frontier) out.emplace_back(std::move(w));
    return out;
}

}  // namespace hilbnef

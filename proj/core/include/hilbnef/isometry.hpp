#pragma once

#include <span>
#include <vector>

#include "hilbnef/lattice.hpp"

namespace hilbnef {

/// Lattice isometry of NS(S_a^[n]) in the basis (h1, e, h2): a 3x3
/// rational matrix M acting on coordinate columns with M^T G M = G checked
/// exactly at construction (G the BBF Gram matrix) and det = +-1.
/// Composition is "rightmost acts first".
class Isometry {
public:
    Isometry(Mat3r m, Params par);

    const Mat3r& matrix() const { return mat_; }
    const Params& params() const { return par_; }

    DivClass apply(const DivClass& p) const;
    DivClassQ apply(const DivClassQ& p) const;

    Isometry compose(const Isometry& rhs) const;  // (*this) after rhs
    Isometry inverse() const;
    Isometry power(long k) const;

    bool operator==(const Isometry& o) const { return mat_ == o.mat_ && par_ == o.par_; }

private:
    Mat3r mat_;
    Params par_;
};

/// Tests M^T G M = G exactly.
bool is_isometry(const Mat3r& m, const Params& par);

/// Reduced word over the three involutive generators {1, 2, 3}: no two
/// adjacent letters are equal. The strict constructor rejects unreduced
/// input; `reduced` cancels adjacent equal letters instead.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    /// Builds a word by cancelling adjacent equal letters (involutions).
    static Word reduced(std::span<const int> letters);

    const std::vector<int>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Word reversed() const;
    std::string str() const;
    bool operator==(const Word&) const = default;

private:
    std::vector<int> letters_;
};

/// Beauville reflection x -> -x + (x, D) D for an integral class D with
/// q(D) = 2 on a Hilbert square (n = 2). Fixes D, negates D^perp.
Isometry beauville_reflection(const DivClass& D);

/// The shift P = [[1,0,a],[0,1,0],[a,0,a^2+1]]; fixes e, valid for all n.
Isometry shift_P(long a, long n);

/// iota_k^* = P^k iota_0^* P^{-k} on the Hilbert square.
Isometry iota_k(long a, long k);

/// The three involutive generators for a = 1, n = 2:
/// A1 = iota_1^*, A2 = iota_0^*, A3 = iota_1^* iota_2^* iota_1^*.
struct GeneratorsA {
    Isometry A1, A2, A3;
    const Isometry& at(int letter) const;
};
const GeneratorsA& generators_A(long a = 1);

/// Applies the generators named in w to p, reading w left to right: the
/// first letter acts first. Requires a = 1, n = 2.
DivClass apply_word(const Word& w, const DivClass& p);

/// The single isometry equal to applying w's letters first-to-last.
Isometry word_isometry(const Word& w);

/// All reduced words of length exactly len (3 * 2^(len-1) of them for
/// len >= 1), in lexicographic order.
std::vector<Word> reduced_words_of_length(int len);

}  // namespace hilbnef

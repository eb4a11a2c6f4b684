#include "hilbnef/fundomain.hpp"

#include "hilbnef/nefcone2.hpp"

namespace hilbnef {

namespace {

std::uint64_t next_rand(std::uint64_t& s) {
    // splitmix64; fixed across platforms so seeded suites are reproducible
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Params hilb_square() { return Params(1, 2); }

}  // namespace

const Cone3& pi_cone() {
    static const Cone3 pi = Cone3::from_halfspaces({
        Vec3z{1, 0, -1},   // x - z >= 0
        Vec3z{0, 0, 1},    // z >= 0
        Vec3z{3, 2, 0},    // 3x + 2y >= 0
        Vec3z{8, 6, 4},    // 8x + 6y + 4z >= 0
        Vec3z{12, 6, -4},  // 12x + 6y - 4z >= 0
        Vec3z{0, -1, 0},   // y <= 0
    });
    return pi;
}

Region classify(const DivClass& p) {
    if ((p.x - p.z).sign() < 0) return Region::R1;
    if (p.z.sign() < 0) return Region::R2;
    if ((Rat(3) * p.x + Rat(2) * p.y).sign() < 0) return Region::R3;
    return Region::R4;
}

Rat f_energy(const DivClass& p) { return Rat(2) * p.x + p.y; }

ReductionResult reduce(const DivClass& p, const ReduceOptions& opts) {
    if (!(p.par == hilb_square()))
        throw std::invalid_argument("reduce: defined for a = 1, n = 2");
    if (opts.validate) {
        if (!in_positive_cone(p))
            throw std::domain_error("reduce: input not in the positive cone");
        if (!is_nef(p, opts.nef_depth))
            throw std::domain_error("reduce: input fails the nef test");
    }
    const GeneratorsA& gens = generators_A(1);
    ReductionResult res{p, Word{}, {}};
    std::vector<int> letters;
    DivClass cur = p;
    long iter = 0;
    for (;;) {
        Region r = classify(cur);
        res.trace.push_back({cur, r, f_energy(cur)});
        if (r == Region::R4) break;
        int letter = static_cast<int>(r);
        letters.push_back(letter);
        cur = gens.at(letter).apply(cur);
        if (++iter > opts.max_iter)
            throw std::runtime_error("reduce: iteration cap exceeded (this signals a bug)");
    }
    res.reduced = cur;
    res.word = Word::reduced(letters);
    if (res.word.letters() != letters)
        throw std::logic_error("reduce: recorded word is not reduced");
    return res;
}

DivClass random_interior_pi_point(std::uint64_t& state) {
    const auto& rays = pi_cone().rays();
    Vec3r acc{Rat(0), Rat(0), Rat(0)};
    for (const auto& r : rays) {
        Rat c(static_cast<long>(next_rand(state) % 9 + 1));
        for (int i = 0; i < 3; ++i) acc[i] += c * Rat(r[i]);
    }
    Rat den(static_cast<long>(next_rand(state) % 4 + 1));
    return {acc[0] / den, acc[1] / den, acc[2] / den, hilb_square()};
}

Word random_reduced_word(int len, std::uint64_t& state) {
    std::vector<int> letters;
    int prev = 0;
    for (int i = 0; i < len; ++i) {
        int l;
        if (prev == 0) {
            l = static_cast<int>(next_rand(state) % 3) + 1;
        } else {
            int pick = static_cast<int>(next_rand(state) % 2);
            l = 0;
            for (int cand = 1; cand <= 3; ++cand)
                if (cand != prev && pick-- == 0) {
                    l = cand;
                    break;
                }
        }
        letters.push_back(l);
        prev = l;
    }
    return Word(std::move(letters));
}

TilingReport tiling_report(int max_len, long samples, std::uint64_t seed) {
    if (max_len < 0) throw std::invalid_argument("tiling_report: negative length");
    TilingReport rep;
    rep.max_len = max_len;
    for (int l = 0; l <= max_len; ++l)
        for (auto& w : reduced_words_of_length(l)) rep.words.push_back(std::move(w));
    rep.translates = static_cast<long>(rep.words.size());

    std::vector<Cone3> cones;
    cones.reserve(rep.words.size());
    for (const auto& w : rep.words)
        cones.push_back(transformed(pi_cone(), word_isometry(w).matrix()));

    rep.disjoint = true;
    for (size_t i = 0; i < cones.size() && rep.disjoint; ++i)
        for (size_t j = i + 1; j < cones.size(); ++j)
            if (!interiors_disjoint(cones[i], cones[j])) {
                rep.disjoint = false;
                break;
            }

    std::uint64_t state = seed;
    rep.samples = samples;
    for (long s = 0; s < samples; ++s) {
        int len = static_cast<int>(next_rand(state) % (max_len + 1));
        Word w = random_reduced_word(len, state);
        DivClass p = apply_word(w, random_interior_pi_point(state));
        long hits = 0;
        for (const auto& c : cones)
            if (c.contains(p, /*strict=*/false)) ++hits;
        if (hits == 1) ++rep.covered_exactly_once;
    }
    return rep;
}

}  // namespace hilbnef

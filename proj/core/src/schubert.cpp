#include "glncomb/schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "glncomb/characters.hpp"

namespace glncomb {

namespace {

LaurentPoly staircase(int n) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < n; ++k) e[k] = n - 1 - k;
    return LaurentPoly::monomial(n, e);
}

}  // namespace

LaurentPoly schubert_descending(const Permutation& w) {
    const int n = w.size();
    std::vector<int> seq;
    Permutation v = w;
    while (auto i = first_ascent(v)) {
        seq.push_back(*i);
        v = right_mul(v, *i);
    }
    LaurentPoly acc = staircase(n);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) acc = divided_difference(*it, acc);
    return acc;
}

LaurentPoly schubert_descending(const Permutation& w, const Word& word_to_w0) {
    const int n = w.size();
    if (word_to_w0.n != n) throw std::invalid_argument("size mismatch");
    if (!is_reduced(word_to_w0)) throw std::invalid_argument("word must be reduced");
    if (!(compose(w, word_to_perm(word_to_w0)) == longest(n))) {
        throw std::invalid_argument("word does not lead from the permutation to w0");
    }
    LaurentPoly acc = staircase(n);
    for (auto it = word_to_w0.letters.rbegin(); it != word_to_w0.letters.rend(); ++it) {
        acc = divided_difference(*it, acc);
    }
    return acc;
}

Word ascending_embedding_word(const Permutation& w) {
    Word out{w.size(), {}};
    Permutation v = w;
    while (auto i = first_ascent(v)) {
        out.letters.push_back(*i);
        v = right_mul(v, *i);
    }
    return out;
}

LaurentPoly schubert_ascending(const Permutation& w) {
    return demazure_char(inversion_family(w), ascending_embedding_word(w));
}

namespace {

struct MultSet {
    std::vector<std::pair<uint32_t, int>> entries;  // bits -> multiplicity, sorted

    explicit MultSet(const MultFamily& d) {
        for (size_t k = 0; k < d.members.size(); ++k) {
            if (d.mult[k] > 0) entries.emplace_back(d.members[k].bits(), d.mult[k]);
        }
        std::sort(entries.begin(), entries.end());
    }
    bool operator==(const MultSet& o) const { return entries == o.entries; }
};

// Removes one copy of the member with the given bits; false if absent.
bool remove_one(MultFamily& d, uint32_t bits) {
    for (size_t k = 0; k < d.members.size(); ++k) {
        if (d.members[k].bits() != bits || d.mult[k] == 0) continue;
        if (--d.mult[k] == 0) {
            d.members.erase(d.members.begin() + static_cast<long>(k));
            d.mult.erase(d.mult.begin() + static_cast<long>(k));
        }
        return true;
    }
    return false;
}

void add_one(MultFamily& d, const Subset& c) {
    for (size_t k = 0; k < d.members.size(); ++k) {
        if (d.members[k] == c) {
            ++d.mult[k];
            return;
        }
    }
    d.members.push_back(c);
    d.mult.push_back(1);
}

MultFamily act_mult(const Permutation& p, const MultFamily& d) {
    MultFamily out;
    out.n = d.n;
    for (size_t k = 0; k < d.members.size(); ++k) {
        out.members.push_back(act(p, d.members[k]));
        out.mult.push_back(d.mult[k]);
    }
    return out;
}

}  // namespace

std::vector<FirstAscentStep> first_ascent_chain(const Permutation& w) {
    const int n = w.size();
    std::vector<FirstAscentStep> steps;
    Permutation cur = w;
    for (;;) {
        int chosen = 0;
        Permutation next(n);
        for (int i = 1; i < n; ++i) {
            if (cur(i) <= cur(i + 1)) continue;  // need ws_i < w
            Permutation cand = right_mul(cur, i);
            auto fa = first_ascent(cand);
            if (fa && *fa == i) {
                chosen = i;
                next = cand;
                break;
            }
        }
        if (chosen == 0) break;
        const int i = chosen;

        MultFamily inv = inversion_family(cur);
        MultFamily prime = inv;
        if (!remove_one(prime, prefix_set(n, i).bits())) {
            throw std::logic_error("first-ascent step: [i] missing from the inversion family");
        }
        SubsetFamily prime_members{n, prime.members};
        if (!is_i_free(prime_members, i)) {
            throw std::logic_error("first-ascent step: reduced family is not i-free");
        }
        MultFamily predicted = act_mult(simple_transposition(n, i), prime);
        if (i >= 2) add_one(predicted, prefix_set(n, i - 1));
        if (!(MultSet(predicted) == MultSet(inversion_family(next)))) {
            throw std::logic_error("first-ascent step: inversion family mismatch");
        }

        steps.push_back(FirstAscentStep{cur, i, next, prime});
        cur = next;
    }
    return steps;
}

KpReport verify_kp(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("verify_kp guard: n <= 5");
    KpReport report;
    report.n = n;
    std::vector<int> image(n);
    for (int k = 0; k < n; ++k) image[k] = k + 1;
    do {
        Permutation w(n, image);
        ++report.total;
        if (!(schubert_descending(w) == schubert_ascending(w))) {
            report.mismatches.push_back(w);
        }
    } while (std::next_permutation(image.begin(), image.end()));
    return report;
}

}  // namespace glncomb

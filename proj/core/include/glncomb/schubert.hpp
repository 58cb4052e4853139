#pragma once
// Schubert polynomials two independent ways: the descending divided-difference
// recursion from the staircase monomial, and the ascending route through the
// Demazure character of the inversion family.

#include <vector>

#include "glncomb/families.hpp"
#include "glncomb/laurent.hpp"
#include "glncomb/weyl.hpp"

namespace glncomb {

// Applies divided differences along the first-ascent path from w up to w_0,
// starting from x_1^{n-1} x_2^{n-2} ... x_{n-1}.
LaurentPoly schubert_descending(const Permutation& w);

// Same start, but along a caller-chosen reduced word for w^{-1} w_0.
LaurentPoly schubert_descending(const Permutation& w, const Word& word_to_w0);

// Demazure character of the inversion family I(w) along the word of
// first-ascent letters on the way from w up to w_0.
LaurentPoly schubert_ascending(const Permutation& w);
Word ascending_embedding_word(const Permutation& w);

// One step of the downward chain: ws_i < w where i is the first ascent of
// ws_i, together with the i-free part I'(w) = I(w) minus one copy of [i].
struct FirstAscentStep {
    Permutation from;
    int i;
    Permutation to;
    MultFamily i_free_part;
};

// Greedy chain taking the smallest admissible i at each step, stopping when
// none exists.  Each executed step has the facts
//   (a) I'(w) is i-free,
//   (b) [i] lies in I(w),
//   (c) I(w s_i) = s_i I'(w) with one copy of [i-1] added (none for i = 1)
// verified; a violation throws logic_error.
std::vector<FirstAscentStep> first_ascent_chain(const Permutation& w);

struct KpReport {
    int n = 0;
    int total = 0;
    std::vector<Permutation> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Compares both constructions over all of S_n.  Guarded to n <= 5.
KpReport verify_kp(int n);

}  // namespace glncomb

#pragma once
// Characters of flagged Weyl modules: the Demazure product formula along an
// embedding word, the Bott-Samelson variant for arbitrary words, full
// characters, and an independent rank-by-weight oracle built from products
// of minors of a generic matrix.

#include <string>
#include <vector>

#include "glncomb/families.hpp"
#include "glncomb/laurent.hpp"
#include "glncomb/weyl.hpp"

namespace glncomb {

// Character along a supplied embedding word.  Every non-prefix member of d
// must appear among the chamber sets of the word; members that are standard
// prefix sets [i] contribute the leading fundamental-weight factor instead.
LaurentPoly demazure_char(const MultFamily& d, const Word& word);

// Same, with the embedding word discovered by find_embedding_word.
LaurentPoly demazure_char(const MultFamily& d);

// Lambda_{i_1}(pi_{i_1}^{m_1} * Lambda_{i_2}(pi_{i_2}^{m_2} * ...)) with no
// prefix factor.  The word need not be reduced.
LaurentPoly bott_samelson_char(const Word& word, const std::vector<int>& mult);

// Symmetrization by the full Demazure operator Lambda_{w_0}.
LaurentPoly full_char(const MultFamily& d, const Word& word);
LaurentPoly full_char(const MultFamily& d);

// A filling assigns each column (members expanded by multiplicity, in order)
// a sorted row set of the same size.
using Filling = std::vector<std::vector<int>>;

// Componentwise bound after sorting: rows[t] <= column[t].
bool is_flagged_filling(const std::vector<int>& column, const std::vector<int>& rows);

std::vector<Filling> enumerate_fillings(const MultFamily& d, bool flagged);

// Character from first principles: enumerate fillings, expand each product
// of minors as an integer polynomial in the matrix entries (upper-triangular
// matrix when flagged), and sum per-weight ranks of the resulting spans.
// Guarded to n <= 5 and at most 10 boxes in total.
LaurentPoly weyl_char_oracle(const MultFamily& d, bool flagged);

// Multiplicity transport along lambda_family: the new member s_i[i] receives
// m0 and each s_i C keeps the multiplicity of C, merging additively if the
// two collide.
MultFamily lambda_mult_family(int i, const MultFamily& d, int m0);

struct OracleSweepReport {
    int n = 0;
    int max_boxes = 0;
    int checked = 0;
    int flagged_mismatches = 0;
    int unflagged_mismatches = 0;
    int zero_extension_mismatches = 0;
    std::vector<MultFamily> failures;

    bool ok() const {
        return flagged_mismatches == 0 && unflagged_mismatches == 0 &&
               zero_extension_mismatches == 0;
    }
};

// Sweeps a deterministic corpus of strongly separated (D, m) over [n]: every
// family with up to 3 distinct members at multiplicity 1, every family with
// up to 2 members and multiplicities in {1, 2}, and the inversion family of
// every w in S_n, all within the box budget.  For each instance the flagged
// oracle is compared with demazure_char, the unflagged oracle with full_char,
// and the character is recomputed after adjoining multiplicity-0 members (a
// free prefix set and a chamber set of the discovered word).  Guarded to
// n <= 4 and max_boxes <= 10.
OracleSweepReport verify_oracle_sweep(int n, int max_boxes);

std::string char_to_json(const MultFamily& d, const Word& word, const LaurentPoly& chr);

}  // namespace glncomb

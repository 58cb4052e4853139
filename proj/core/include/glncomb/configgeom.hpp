#pragma once
// Configurations of rational subspaces attached to chamber families:
// coordinate configurations, exact dimension computations, membership tests
// for the flagged inclusion variety, and the conjectural dimension bounds.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glncomb/families.hpp"
#include "glncomb/linalg.hpp"
#include "glncomb/weyl.hpp"

namespace glncomb {

// Column span of an integer basis matrix.  Rational input is admitted via
// parsing; each column is scaled to integer entries, which keeps the span.
struct Subspace {
    int n = 0;
    IntMatrix basis;  // n rows, full column rank

    Subspace() = default;
    Subspace(int n, IntMatrix basis);  // validates the rank
    int dim() const { return basis.cols; }
};

// One subspace per family member, in member order.
struct Configuration {
    SubsetFamily family;
    std::vector<Subspace> spaces;
};

// One subspace per letter of the word, duplicates retained positionally.
struct WordConfiguration {
    Word word;
    std::vector<Subspace> spaces;
};

Subspace coordinate_subspace(const Subset& c);
Configuration generating_point(const SubsetFamily& d);
WordConfiguration generating_word_point(const Word& word);

bool includes(const Subspace& inner, const Subspace& outer);
bool equal_span(const Subspace& a, const Subspace& b);

int dim_sum(const std::vector<Subspace>& spaces);
int dim_intersection(const std::vector<Subspace>& spaces);
Subspace intersection(const Subspace& a, const Subspace& b);

// Checks over the full chamber family of the word: every strict containment
// C subset C' forces V_C inside V_{C'}, and V_{[i]} equals the standard
// coordinate space.  The configuration must be indexed by
// full_chamber_family(word) in that order.
bool is_inclusion_point(const Word& word, const Configuration& config);

// The positional conditions from the fibration picture.  The word builds a
// flag step by step; a configuration lies in the image of that process
// exactly when each V_k sits inside the space at the most recent earlier
// position with letter i_k + 1 (the standard Q^{i_k + 1} when there is
// none) and contains the space at the most recent earlier position with
// letter i_k - 1 (the standard Q^{i_k - 1} when there is none; vacuous for
// letter 1).
bool theta_image_conditions(const Word& word, const WordConfiguration& config);

// For every nonempty subfamily D' of D: dim of the intersection of the V_C
// is at least |intersection of the C|, and dim of the sum is at most
// |union of the C|.  The flagged variant first adjoins the standard spaces
// Q^1..Q^n with their prefix sets.  Guarded to |D| <= 12.
bool conjecture_conditions(const Configuration& config, bool flagged);

// Derives the member-indexed configuration over full_chamber_family(word)
// from positional data: prefix members get standard spaces, chamber members
// take the space at their first occurrence.  Empty if duplicate positions
// carry different spans.
std::optional<Configuration> member_configuration(const WordConfiguration& config);

// Sampling for orbit tests: integer entries uniform in [-9, 9]; triangular
// samples force a nonzero diagonal; general samples are resampled until
// invertible.
IntMatrix random_upper_triangular(int n, std::mt19937_64& rng);
IntMatrix random_invertible(int n, std::mt19937_64& rng);
Subspace apply(const IntMatrix& g, const Subspace& v);
Configuration apply(const IntMatrix& g, const Configuration& config);
WordConfiguration apply(const IntMatrix& g, const WordConfiguration& config);

// File format: one subspace per block, blocks separated by blank lines; each
// line is one basis vector of n space-separated rationals.
std::vector<Subspace> parse_subspace_blocks(const std::string& text, int n);
std::string to_string(const Subspace& v);

}  // namespace glncomb

#pragma once

/*
 * Symmetric group S_n combinatorics: permutations in one-line notation,
 * words in the adjacent transpositions s_1..s_{n-1}, reduced words, root
 * sequences, minimal coset representatives, and desingularization words
 * for weak-order increasing sequences.
 *
 * Conventions used throughout the library:
 *   - permutations act on {1..n}, composition (u*v)(i) = u(v(i));
 *   - a word (i_1,...,i_l) denotes the product s_{i_1} s_{i_2} ... s_{i_l},
 *     multiplied left to right;
 *   - length is the inversion count; the longest element is (n,n-1,...,1).
 */

#include <optional>
#include <string>
#include <vector>

namespace glncomb {

class Permutation {
public:
    // Identity on {1..n}.
    explicit Permutation(int n);
    // One-line notation: image[k] = w(k+1). Must be a rearrangement of 1..n.
    Permutation(int n, std::vector<int> image);

    int size() const { return n_; }
    // 1-based application.
    int operator()(int i) const { return image_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& image() const { return image_; }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return image_ < o.image_; }

private:
    int n_;
    std::vector<int> image_;
};

// Word in the generators s_1..s_{n-1}; an empty letter list is the identity.
struct Word {
    int n = 0;
    std::vector<int> letters;

    bool operator==(const Word&) const = default;
    bool operator<(const Word& o) const { return letters < o.letters; }
};

// The root e_a - e_b scaled by sign, with a < b. sign = +1 encodes e_a - e_b,
// sign = -1 encodes e_b - e_a.
struct Root {
    int a = 0;
    int b = 0;
    int sign = 1;

    bool operator==(const Root&) const = default;
};

Permutation simple_transposition(int n, int i);
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
int length(const Permutation& w);
Permutation longest(int n);

// w * s_i: swaps the entries at positions i, i+1.
Permutation right_mul(const Permutation& w, int i);
// s_i * w: swaps the values i, i+1.
Permutation left_mul(int i, const Permutation& w);

Permutation word_to_perm(const Word& w);
bool is_reduced(const Word& w);

// All reduced words of w in lexicographic order. Guarded to n <= 7.
std::vector<Word> reduced_words(const Permutation& w);

// Smallest i with w(i+1) > w(i); empty exactly when w is the longest element.
std::optional<int> first_ascent(const Permutation& w);

// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) for each position k.
std::vector<Root> root_sequence(const Word& w);

// Minimal-length representative of w * (S_j x S_{n-j}): sorts w(1..j) and
// w(j+1..n) ascending.
Permutation min_coset_rep(const Permutation& w, int j);

// Consecutive lengths add: length(w_{k-1}) + length(w_{k-1}^-1 w_k) = length(w_k).
bool is_weak_order_increasing(const std::vector<Permutation>& ws);

// Lexicographically smallest reduced word of w (greedy smallest left descent).
Word lex_min_reduced_word(const Permutation& w);

// Word produced for a sequence (w_k, j_k): concatenates the lexicographically
// smallest reduced words of the increments between successive minimal coset
// representatives. positions[k] is the prefix length after which the prefix
// product agrees with w_{k+1} on {1..j_{k+1}} as a set:
//   (s_{i_1} ... s_{i_{positions[k]}})[j] = w[j].
struct DesingWord {
    Word word;
    std::vector<int> positions;
};

// Rejects (std::invalid_argument) when the derived representative sequence is
// not weak-order increasing; the message names the failing index.
DesingWord desing_word(const std::vector<Permutation>& ws,
                       const std::vector<int>& js);

std::string to_string(const Permutation& w);  // "2,4,1,5,3"
std::string to_string(const Word& w);         // "1,3,2" ("e" when empty)
Permutation parse_permutation(const std::string& text);
Word parse_word(const std::string& text, int n);

}  // namespace glncomb

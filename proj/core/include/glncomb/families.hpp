#pragma once

/*
 * Families of subsets of {1..n}: chamber families of reduced words, strong
 * separation, %-avoidance, the northwest condition, embedding-word search,
 * inversion families, and text renderings (generalized Young diagrams and
 * wiring diagrams).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glncomb/weyl.hpp"

namespace glncomb {

// Subset of {1..n}, stored as a bitmask (bit k-1 <=> element k). n <= 31.
class Subset {
public:
    Subset(int n, uint32_t bits);
    Subset(int n, const std::vector<int>& elements);

    int n() const { return n_; }
    uint32_t bits() const { return bits_; }
    bool contains(int k) const { return (bits_ >> (k - 1)) & 1u; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    std::vector<int> elements() const;  // ascending

    bool operator==(const Subset&) const = default;

private:
    int n_;
    uint32_t bits_;
};

// {1..k}; k = 0 gives the empty subset.
Subset prefix_set(int n, int k);
// Whether c equals {1..k} for some k >= 1; returns that k.
std::optional<int> as_prefix_set(const Subset& c);
// Elementwise image w(C).
Subset act(const Permutation& w, const Subset& c);
// Compare element sequences lexicographically ({1,3} < {2}, {1} < {1,2}).
bool lex_less(const Subset& a, const Subset& b);

// Ordered family of distinct subsets. Insertion order is preserved (chamber
// families are word-ordered); equality as unordered sets is separate.
struct SubsetFamily {
    int n = 0;
    std::vector<Subset> members;

    bool operator==(const SubsetFamily&) const = default;
};

// Family with one multiplicity >= 0 per member.
struct MultFamily {
    int n = 0;
    std::vector<Subset> members;
    std::vector<int> mult;

    bool operator==(const MultFamily&) const = default;
};

bool equal_as_sets(const SubsetFamily& a, const SubsetFamily& b);

// Chamber sets C_k = s_{i_1} ... s_{i_k} [i_k] in word order. Rejects words
// that are not reduced. Duplicate chamber sets are dropped defensively; when
// duplicates_dropped is non-null it receives the count.
SubsetFamily chamber_family(const Word& word, int* duplicates_dropped = nullptr);

// Chamber family with [1],...,[n] prepended.
SubsetFamily full_chamber_family(const Word& word, int* duplicates_dropped = nullptr);

// {w_k[j_k]} in sequence order, deduplicated.
SubsetFamily family_of_list(const std::vector<Permutation>& ws, const std::vector<int>& js);

// max(C \ C') < min(C' \ C) in one of the two directions (empty differences
// pass vacuously).
bool is_pair_strongly_separated(const Subset& a, const Subset& b);
bool is_strongly_separated(const SubsetFamily& d);
// First violating pair in member order, if any.
std::optional<std::pair<Subset, Subset>> strong_separation_violation(const SubsetFamily& d);

// After sorting members lexicographically: i1 in C_{j1}, i2 in C_{j2},
// i1 > i2, j1 < j2 imply i1 in C_{j2} or i2 in C_{j1}.
bool is_percent_avoiding(const SubsetFamily& d);

// Some ordering C_1, C_2, ... has min(i1,i2) in C_{min(j1,j2)} for all
// i1 in C_{j1}, i2 in C_{j2}. Guarded to |D| <= 12.
bool is_northwest(const SubsetFamily& d);

// Shortest reduced word whose full chamber family contains every member of d,
// lexicographically smallest among shortest. Guarded to n <= 7. Throws with a
// violating pair named when d is not strongly separated.
Word find_embedding_word(const SubsetFamily& d);

// Every member has C intersect {i,i+1} != {i+1}.
bool is_i_free(const SubsetFamily& d, int i);

// {s_i[i]} followed by s_i D, deduplicated.
SubsetFamily lambda_family(int i, const SubsetFamily& d);

SubsetFamily act(const Permutation& w, const SubsetFamily& d);

// C_j(w) = {i < j : w(i) > w(j)} over j = 1..n, empties dropped, identical
// sets merged with multiplicity, ordered by first occurrence.
MultFamily inversion_family(const Permutation& w);

struct RenderOptions {
    bool ascii = false;
};

// One column per member copy (multiplicity), a box at row r iff r lies in the
// member; zero multiplicity omits the column. Empty family renders empty.
std::string render_young(const MultFamily& d, const RenderOptions& opts = {});

// Wiring diagram of the word: n tracks, one crossing per letter, followed by a
// "chambers:" line listing the region labels left to right (the full chamber
// family order).
std::string render_wiring(const Word& word, const RenderOptions& opts = {});

std::string to_string(const Subset& c);        // "124" (n <= 9) or "{1,2,4}"
std::string to_string(const SubsetFamily& d);  // "2, 23, 3"
std::string to_string(const MultFamily& d);    // "12:1, 24:1"

// Parses "124" / "{1,2,4}". n = 0 infers the ground set from max element <= 9.
Subset parse_subset(const std::string& text, int n = 0);
// Parses "2,23,3" (or "{1,3},{2}"); n = 0 infers from the largest element.
SubsetFamily parse_family(const std::string& text, int n = 0);
// Parses "234:2,4:3"; members without ":" default to multiplicity 1.
MultFamily parse_mult_family(const std::string& text, int n = 0);

std::string family_to_json(const MultFamily& d);
MultFamily family_from_json(const std::string& json_text);

}  // namespace glncomb

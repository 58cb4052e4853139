#include "glncomb/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glncomb {

namespace {

void check_letter(int n, int i) {
    if (i < 1 || i >= n) {
        throw std::invalid_argument("letter " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(n - 1));
    }
}

}  // namespace

Permutation::Permutation(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    image_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) image_[static_cast<size_t>(i)] = i + 1;
}

Permutation::Permutation(int n, std::vector<int> image) : n_(n), image_(std::move(image)) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    if (image_.size() != static_cast<size_t>(n)) {
        throw std::invalid_argument("one-line notation has wrong length");
    }
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("not a rearrangement of 1.." + std::to_string(n));
        }
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation simple_transposition(int n, int i) {
    check_letter(n, i);
    Permutation w(n);
    std::vector<int> img = w.image();
    std::swap(img[static_cast<size_t>(i) - 1], img[static_cast<size_t>(i)]);
    return Permutation(n, std::move(img));
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("size mismatch in compose");
    std::vector<int> img(static_cast<size_t>(u.size()));
    for (int i = 1; i <= u.size(); ++i) img[static_cast<size_t>(i) - 1] = u(v(i));
    return Permutation(u.size(), std::move(img));
}

Permutation inverse(const Permutation& w) {
    std::vector<int> img(static_cast<size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) img[static_cast<size_t>(w(i)) - 1] = i;
    return Permutation(w.size(), std::move(img));
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

Permutation longest(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = n - i;
    return Permutation(n, std::move(img));
}

Permutation right_mul(const Permutation& w, int i) {
    check_letter(w.size(), i);
    std::vector<int> img = w.image();
    std::swap(img[static_cast<size_t>(i) - 1], img[static_cast<size_t>(i)]);
    return Permutation(w.size(), std::move(img));
}

Permutation left_mul(int i, const Permutation& w) {
    check_letter(w.size(), i);
    std::vector<int> img = w.image();
    for (int& v : img) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return Permutation(w.size(), std::move(img));
}

Permutation word_to_perm(const Word& w) {
    Permutation p(w.n);
    for (int i : w.letters) p = right_mul(p, i);
    return p;
}

bool is_reduced(const Word& w) {
    for (int i : w.letters) check_letter(w.n, i);
    return length(word_to_perm(w)) == static_cast<int>(w.letters.size());
}

namespace {

void reduced_words_rec(const Permutation& w, Word& prefix, std::vector<Word>& out) {
    // Left descents of the remaining factor are exactly the letters that can
    // come next; ascending iteration yields lexicographic output order.
    if (length(w) == 0) {
        out.push_back(prefix);
        return;
    }
    Permutation wi = inverse(w);
    for (int i = 1; i < w.size(); ++i) {
        if (wi(i) > wi(i + 1)) {
            prefix.letters.push_back(i);
            reduced_words_rec(left_mul(i, w), prefix, out);
            prefix.letters.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w) {
    if (w.size() > 7) {
        throw std::invalid_argument("reduced word enumeration is guarded to n <= 7");
    }
    std::vector<Word> out;
    Word prefix{w.size(), {}};
    reduced_words_rec(w, prefix, out);
    return out;
}

std::optional<int> first_ascent(const Permutation& w) {
    for (int i = 1; i < w.size(); ++i)
        if (w(i + 1) > w(i)) return i;
    return std::nullopt;
}

std::vector<Root> root_sequence(const Word& w) {
    std::vector<Root> roots;
    roots.reserve(w.letters.size());
    Permutation prefix(w.n);
    for (int i : w.letters) {
        check_letter(w.n, i);
        int a = prefix(i);
        int b = prefix(i + 1);
        if (a < b) roots.push_back(Root{a, b, +1});
        else roots.push_back(Root{b, a, -1});
        prefix = right_mul(prefix, i);
    }
    return roots;
}

Permutation min_coset_rep(const Permutation& w, int j) {
    if (j < 1 || j > w.size()) {
        throw std::invalid_argument("block size out of range in min_coset_rep");
    }
    std::vector<int> img = w.image();
    std::sort(img.begin(), img.begin() + j);
    std::sort(img.begin() + j, img.end());
    return Permutation(w.size(), std::move(img));
}

bool is_weak_order_increasing(const std::vector<Permutation>& ws) {
    for (size_t k = 1; k < ws.size(); ++k) {
        const Permutation& a = ws[k - 1];
        const Permutation& b = ws[k];
        if (a.size() != b.size()) throw std::invalid_argument("size mismatch in sequence");
        if (length(a) + length(compose(inverse(a), b)) != length(b)) return false;
    }
    return true;
}

Word lex_min_reduced_word(const Permutation& w) {
    Word word{w.size(), {}};
    Permutation rest = w;
    while (length(rest) > 0) {
        Permutation ri = inverse(rest);
        for (int i = 1; i < rest.size(); ++i) {
            if (ri(i) > ri(i + 1)) {
                word.letters.push_back(i);
                rest = left_mul(i, rest);
                break;
            }
        }
    }
    return word;
}

DesingWord desing_word(const std::vector<Permutation>& ws, const std::vector<int>& js) {
    if (ws.empty()) throw std::invalid_argument("desing_word requires a nonempty sequence");
    if (ws.size() != js.size()) {
        throw std::invalid_argument("permutation and index sequences differ in length");
    }
    const int n = ws.front().size();
    std::vector<Permutation> reps;
    reps.reserve(ws.size());
    for (size_t k = 0; k < ws.size(); ++k) {
        if (ws[k].size() != n) throw std::invalid_argument("size mismatch in sequence");
        if (js[k] < 1 || js[k] > n) {
            throw std::invalid_argument("index " + std::to_string(js[k]) +
                                        " out of range at position " + std::to_string(k + 1));
        }
        reps.push_back(min_coset_rep(ws[k], js[k]));
    }
    for (size_t k = 1; k < reps.size(); ++k) {
        // Sorting different prefixes can lose inversions, so the derived
        // representatives are not automatically increasing; validate.
        std::vector<Permutation> pair{reps[k - 1], reps[k]};
        if (!is_weak_order_increasing(pair)) {
            throw std::invalid_argument(
                "derived representatives are not weak-order increasing at index " +
                std::to_string(k + 1) + " (lengths " + std::to_string(length(reps[k - 1])) +
                " -> " + std::to_string(length(reps[k])) + " with no length-additive factor)");
        }
    }

    DesingWord out;
    out.word.n = n;
    Permutation prev(n);
    for (size_t k = 0; k < reps.size(); ++k) {
        Word inc = lex_min_reduced_word(compose(inverse(prev), reps[k]));
        out.word.letters.insert(out.word.letters.end(), inc.letters.begin(), inc.letters.end());
        out.positions.push_back(static_cast<int>(out.word.letters.size()));
        prev = reps[k];
    }
    return out;
}

std::string to_string(const Permutation& w) {
    std::ostringstream os;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) os << ',';
        os << w(i);
    }
    return os.str();
}

std::string to_string(const Word& w) {
    if (w.letters.empty()) return "e";
    std::ostringstream os;
    for (size_t k = 0; k < w.letters.size(); ++k) {
        if (k > 0) os << ',';
        os << w.letters[k];
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse integer from '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) {
            throw std::invalid_argument("trailing characters in '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
    std::vector<int> img = parse_int_list(text);
    const int n = static_cast<int>(img.size());
    return Permutation(n, std::move(img));
}

Word parse_word(const std::string& text, int n) {
    Word w{n, {}};
    if (text == "e" || text.empty()) return w;
    w.letters = parse_int_list(text);
    for (int i : w.letters) check_letter(n, i);
    return w;
}

}  // namespace glncomb

#include "glncomb/characters.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "glncomb/linalg.hpp"

namespace glncomb {

namespace {

void check_mult(const MultFamily& d) {
    if (d.members.size() != d.mult.size()) {
        throw std::invalid_argument("multiplicity list does not match members");
    }
    for (int m : d.mult) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
    }
}

LaurentPoly weight_power(int n, int i, int m) {
    std::vector<int> e(n, 0);
    for (int k = 0; k < i; ++k) e[k] = m;
    return LaurentPoly::monomial(n, e);
}

}  // namespace

LaurentPoly demazure_char(const MultFamily& d, const Word& word) {
    check_mult(d);
    if (word.n != d.n) throw std::invalid_argument("size mismatch between family and word");
    if (!is_reduced(word)) throw std::invalid_argument("embedding word must be reduced");
    const int n = d.n;
    const size_t l = word.letters.size();

    std::vector<uint32_t> chambers;
    chambers.reserve(l);
    Permutation p(n);
    for (int i : word.letters) {
        p = right_mul(p, i);
        uint32_t bits = 0;
        for (int t = 1; t <= i; ++t) bits |= 1u << (p(t) - 1);
        chambers.push_back(bits);
    }

    std::vector<int> word_mult(l, 0);
    std::vector<int> prefix_mult(n + 1, 0);
    for (size_t t = 0; t < d.members.size(); ++t) {
        if (auto k = as_prefix_set(d.members[t])) {
            prefix_mult[*k] += d.mult[t];
            continue;
        }
        uint32_t bits = d.members[t].bits();
        auto it = std::find(chambers.begin(), chambers.end(), bits);
        if (it == chambers.end()) {
            throw std::invalid_argument("member " + to_string(d.members[t]) +
                                        " is not a chamber set of the word");
        }
        word_mult[static_cast<size_t>(it - chambers.begin())] += d.mult[t];
    }

    LaurentPoly acc = LaurentPoly::constant(n, 1);
    for (size_t k = l; k-- > 0;) {
        int i = word.letters[k];
        if (word_mult[k] != 0) acc *= weight_power(n, i, word_mult[k]);
        acc = demazure(i, acc);
    }
    std::vector<int> lead(n, 0);
    for (int j = 1; j <= n; ++j) {
        for (int t = 0; t < j; ++t) lead[t] += prefix_mult[j];
    }
    acc *= LaurentPoly::monomial(n, lead);
    return acc;
}

LaurentPoly demazure_char(const MultFamily& d) {
    check_mult(d);
    Word word = find_embedding_word(SubsetFamily{d.n, d.members});
    return demazure_char(d, word);
}

LaurentPoly bott_samelson_char(const Word& word, const std::vector<int>& mult) {
    if (mult.size() != word.letters.size()) {
        throw std::invalid_argument("multiplicity list does not match word length");
    }
    for (int m : mult) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
    }
    for (int i : word.letters) {
        if (i < 1 || i >= word.n) throw std::invalid_argument("letter out of range");
    }
    LaurentPoly acc = LaurentPoly::constant(word.n, 1);
    for (size_t k = word.letters.size(); k-- > 0;) {
        int i = word.letters[k];
        if (mult[k] != 0) acc *= weight_power(word.n, i, mult[k]);
        acc = demazure(i, acc);
    }
    return acc;
}

LaurentPoly full_char(const MultFamily& d, const Word& word) {
    return demazure_w(longest(d.n), demazure_char(d, word));
}

LaurentPoly full_char(const MultFamily& d) {
    return demazure_w(longest(d.n), demazure_char(d));
}

bool is_flagged_filling(const std::vector<int>& column, const std::vector<int>& rows) {
    if (column.size() != rows.size()) return false;
    std::vector<int> c = column;
    std::vector<int> r = rows;
    std::sort(c.begin(), c.end());
    std::sort(r.begin(), r.end());
    for (size_t t = 0; t < c.size(); ++t) {
        if (r[t] > c[t]) return false;
    }
    return true;
}

namespace {

struct FillingSpace {
    std::vector<std::vector<int>> columns;               // expanded by multiplicity
    std::vector<std::vector<std::vector<int>>> choices;  // row sets per column
};

FillingSpace build_filling_space(const MultFamily& d, bool flagged) {
    check_mult(d);
    const int n = d.n;
    if (n > 5) throw std::invalid_argument("oracle guard: n <= 5");
    long boxes = 0;
    for (size_t k = 0; k < d.members.size(); ++k) {
        boxes += static_cast<long>(d.mult[k]) * d.members[k].size();
    }
    if (boxes > 10) throw std::invalid_argument("oracle guard: at most 10 boxes");

    FillingSpace fs;
    for (size_t k = 0; k < d.members.size(); ++k) {
        std::vector<int> col = d.members[k].elements();
        if (col.empty()) throw std::invalid_argument("empty column");
        for (int c = 0; c < d.mult[k]; ++c) fs.columns.push_back(col);
    }
    for (const auto& col : fs.columns) {
        std::vector<std::vector<int>> opts;
        const int sz = static_cast<int>(col.size());
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != sz) continue;
            std::vector<int> rows;
            for (int r = 1; r <= n; ++r)
                if (mask & (1u << (r - 1))) rows.push_back(r);
            if (flagged && !is_flagged_filling(col, rows)) continue;
            opts.push_back(std::move(rows));
        }
        fs.choices.push_back(std::move(opts));
    }
    return fs;
}

}  // namespace

std::vector<Filling> enumerate_fillings(const MultFamily& d, bool flagged) {
    FillingSpace fs = build_filling_space(d, flagged);
    std::vector<Filling> out;
    if (fs.columns.empty()) {
        out.push_back({});
        return out;
    }
    for (const auto& opts : fs.choices) {
        if (opts.empty()) return out;
    }
    std::vector<size_t> idx(fs.columns.size(), 0);
    for (;;) {
        Filling f;
        for (size_t k = 0; k < idx.size(); ++k) f.push_back(fs.choices[k][idx[k]]);
        out.push_back(std::move(f));
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == fs.choices[k].size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    return out;
}

namespace {

// Determinant of the submatrix with the given rows and columns, expanded as
// a polynomial in the n*n matrix entries; entry (r,c) with r > c is zero in
// the flagged (upper-triangular) case.
LaurentPoly minor_poly(int n, const std::vector<int>& rows, const std::vector<int>& cols,
                       bool flagged) {
    const int k = static_cast<int>(rows.size());
    LaurentPoly out(n * n);
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool zero = false;
        int inversions = 0;
        for (int t = 0; t < k && !zero; ++t) {
            if (flagged && rows[t] > cols[sigma[t]]) zero = true;
            for (int u = t + 1; u < k; ++u)
                if (sigma[t] > sigma[u]) ++inversions;
        }
        if (zero) continue;
        std::vector<int> e(static_cast<size_t>(n) * n, 0);
        for (int t = 0; t < k; ++t) e[(rows[t] - 1) * n + (cols[sigma[t]] - 1)] += 1;
        out.add_term(e, (inversions % 2 == 0) ? Int(1) : Int(-1));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace

LaurentPoly weyl_char_oracle(const MultFamily& d, bool flagged) {
    FillingSpace fs = build_filling_space(d, flagged);
    const int n = d.n;
    if (fs.columns.empty()) return LaurentPoly::constant(n, 1);
    for (const auto& opts : fs.choices) {
        if (opts.empty()) return LaurentPoly(n);
    }

    // Minor polynomials per column and row choice, reused across fillings.
    std::vector<std::vector<LaurentPoly>> minors;
    for (size_t k = 0; k < fs.columns.size(); ++k) {
        std::vector<LaurentPoly> per;
        for (const auto& rows : fs.choices[k]) {
            per.push_back(minor_poly(n, rows, fs.columns[k], flagged));
        }
        minors.push_back(std::move(per));
    }

    std::map<std::vector<int>, std::vector<LaurentPoly>> by_weight;
    std::vector<size_t> idx(fs.columns.size(), 0);
    for (;;) {
        std::vector<int> weight(n, 0);
        LaurentPoly prod = minors[0][idx[0]];
        for (int r : fs.choices[0][idx[0]]) ++weight[r - 1];
        for (size_t k = 1; k < idx.size(); ++k) {
            prod *= minors[k][idx[k]];
            for (int r : fs.choices[k][idx[k]]) ++weight[r - 1];
        }
        if (!prod.is_zero()) by_weight[weight].push_back(std::move(prod));
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == fs.choices[k].size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }

    LaurentPoly chr(n);
    for (const auto& [weight, polys] : by_weight) {
        std::map<std::vector<int>, int> monomial_col;
        for (const LaurentPoly& f : polys) {
            for (const auto& [e, c] : f.terms()) {
                monomial_col.try_emplace(e, static_cast<int>(monomial_col.size()));
            }
        }
        IntMatrix m(static_cast<int>(polys.size()), static_cast<int>(monomial_col.size()));
        for (size_t r = 0; r < polys.size(); ++r) {
            for (const auto& [e, c] : polys[r].terms()) {
                m.at(static_cast<int>(r), monomial_col.at(e)) = c;
            }
        }
        int rk = rank(m);
        if (rk > 0) chr.add_term(weight, Int(rk));
    }
    return chr;
}

MultFamily lambda_mult_family(int i, const MultFamily& d, int m0) {
    check_mult(d);
    if (i < 1 || i >= d.n) throw std::invalid_argument("index out of range");
    Permutation si = simple_transposition(d.n, i);
    MultFamily out;
    out.n = d.n;
    auto add = [&out](const Subset& c, int m) {
        for (size_t k = 0; k < out.members.size(); ++k) {
            if (out.members[k] == c) {
                out.mult[k] += m;
                return;
            }
        }
        out.members.push_back(c);
        out.mult.push_back(m);
    };
    add(act(si, prefix_set(d.n, i)), m0);
    for (size_t k = 0; k < d.members.size(); ++k) add(act(si, d.members[k]), d.mult[k]);
    return out;
}

namespace {

void add_zero_member(MultFamily& d, const Subset& c) {
    d.members.push_back(c);
    d.mult.push_back(0);
}

}  // namespace

OracleSweepReport verify_oracle_sweep(int n, int max_boxes) {
    if (n < 2 || n > 4) throw std::invalid_argument("oracle sweep guard: 2 <= n <= 4");
    if (max_boxes < 1 || max_boxes > 10) {
        throw std::invalid_argument("oracle sweep guard: at most 10 boxes");
    }
    OracleSweepReport rep;
    rep.n = n;
    rep.max_boxes = max_boxes;

    std::vector<MultFamily> corpus;
    auto admit = [&](const std::vector<uint32_t>& bits, const std::vector<int>& mult) {
        long boxes = 0;
        MultFamily d;
        d.n = n;
        for (size_t k = 0; k < bits.size(); ++k) {
            d.members.emplace_back(n, bits[k]);
            d.mult.push_back(mult[k]);
            boxes += static_cast<long>(mult[k]) * d.members.back().size();
        }
        if (boxes > max_boxes) return;
        if (!is_strongly_separated(SubsetFamily{n, d.members})) return;
        corpus.push_back(std::move(d));
    };

    const uint32_t top = (1u << n) - 1u;
    for (uint32_t a = 1; a <= top; ++a) {
        admit({a}, {1});
        admit({a}, {2});
        for (uint32_t b = a + 1; b <= top; ++b) {
            for (int ma : {1, 2})
                for (int mb : {1, 2}) admit({a, b}, {ma, mb});
            for (uint32_t c = b + 1; c <= top; ++c) admit({a, b, c}, {1, 1, 1});
        }
    }
    std::vector<int> image(n);
    for (int k = 0; k < n; ++k) image[k] = k + 1;
    do {
        corpus.push_back(inversion_family(Permutation(n, image)));
    } while (std::next_permutation(image.begin(), image.end()));

    for (const MultFamily& d : corpus) {
        Word word = find_embedding_word(SubsetFamily{d.n, d.members});
        LaurentPoly flagged_char = demazure_char(d, word);
        bool bad = false;
        if (!(flagged_char == weyl_char_oracle(d, true))) {
            ++rep.flagged_mismatches;
            bad = true;
        }
        LaurentPoly unflagged_char = demazure_w(longest(n), flagged_char);
        if (!(unflagged_char == weyl_char_oracle(d, false))) {
            ++rep.unflagged_mismatches;
            bad = true;
        }

        int free_prefix = 0;
        for (int k = 1; k <= n && free_prefix == 0; ++k) {
            Subset pk = prefix_set(n, k);
            if (std::find(d.members.begin(), d.members.end(), pk) == d.members.end()) {
                free_prefix = k;
            }
        }
        if (free_prefix > 0) {
            MultFamily ext = d;
            add_zero_member(ext, prefix_set(n, free_prefix));
            if (!(demazure_char(ext) == flagged_char)) {
                ++rep.zero_extension_mismatches;
                bad = true;
            }
        }
        for (const Subset& c : chamber_family(word).members) {
            if (std::find(d.members.begin(), d.members.end(), c) != d.members.end()) continue;
            MultFamily ext = d;
            add_zero_member(ext, c);
            if (!(demazure_char(ext) == flagged_char)) {
                ++rep.zero_extension_mismatches;
                bad = true;
            }
            break;
        }

        if (bad) rep.failures.push_back(d);
        ++rep.checked;
    }
    return rep;
}

std::string char_to_json(const MultFamily& d, const Word& word, const LaurentPoly& chr) {
    nlohmann::json j;
    j["n"] = d.n;
    j["family"] = nlohmann::json::array();
    for (const Subset& c : d.members) j["family"].push_back(c.elements());
    j["mult"] = d.mult;
    j["word"] = word.letters;
    j["char"] = nlohmann::json::array();
    for (const auto& [e, c] : sorted_terms(chr)) {
        nlohmann::json term;
        term["exps"] = e;
        term["coef"] = c.str();
        j["char"].push_back(term);
    }
    return j.dump();
}

}  // namespace glncomb

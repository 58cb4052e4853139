#include "glncomb/configgeom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glncomb {

Subspace::Subspace(int n_, IntMatrix basis_) : n(n_), basis(std::move(basis_)) {
    if (basis.rows != n) throw std::invalid_argument("basis row count differs from n");
    if (basis.cols > n) throw std::invalid_argument("more basis vectors than the dimension");
    if (rank(basis) != basis.cols) throw std::invalid_argument("basis is not independent");
}

Subspace coordinate_subspace(const Subset& c) {
    IntMatrix m(c.n(), c.size());
    int col = 0;
    for (int j : c.elements()) m.at(j - 1, col++) = 1;
    return Subspace(c.n(), std::move(m));
}

Configuration generating_point(const SubsetFamily& d) {
    Configuration out;
    out.family = d;
    for (const Subset& c : d.members) out.spaces.push_back(coordinate_subspace(c));
    return out;
}

WordConfiguration generating_word_point(const Word& word) {
    WordConfiguration out;
    out.word = word;
    Permutation p(word.n);
    for (int i : word.letters) {
        p = right_mul(p, i);
        uint32_t bits = 0;
        for (int t = 1; t <= i; ++t) bits |= 1u << (p(t) - 1);
        out.spaces.push_back(coordinate_subspace(Subset(word.n, bits)));
    }
    return out;
}

bool includes(const Subspace& inner, const Subspace& outer) {
    if (inner.n != outer.n) throw std::invalid_argument("ambient dimension mismatch");
    return rank(hconcat(outer.basis, inner.basis)) == outer.dim();
}

bool equal_span(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && includes(a, b);
}

int dim_sum(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("empty space list");
    IntMatrix all = spaces.front().basis;
    for (size_t k = 1; k < spaces.size(); ++k) {
        if (spaces[k].n != spaces.front().n) {
            throw std::invalid_argument("ambient dimension mismatch");
        }
        all = hconcat(all, spaces[k].basis);
    }
    return rank(all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.n != b.n) throw std::invalid_argument("ambient dimension mismatch");
    IntMatrix k = kernel_basis(hconcat(a.basis, b.basis));
    IntMatrix coeffs(a.dim(), k.cols);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < k.cols; ++c) coeffs.at(r, c) = k.at(r, c);
    return Subspace(a.n, matmul(a.basis, coeffs));
}

int dim_intersection(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("empty space list");
    Subspace acc = spaces.front();
    for (size_t k = 1; k < spaces.size(); ++k) acc = intersection(acc, spaces[k]);
    return acc.dim();
}

bool is_inclusion_point(const Word& word, const Configuration& config) {
    SubsetFamily full = full_chamber_family(word);
    if (!(config.family.n == full.n) || config.family.members.size() != full.members.size() ||
        config.spaces.size() != full.members.size()) {
        throw std::invalid_argument("configuration is not indexed by the full chamber family");
    }
    for (size_t k = 0; k < full.members.size(); ++k) {
        if (!(config.family.members[k] == full.members[k])) {
            throw std::invalid_argument("configuration members out of order");
        }
        if (config.spaces[k].dim() != full.members[k].size()) {
            throw std::invalid_argument("subspace dimension differs from member size");
        }
    }
    for (size_t k = 0; k < full.members.size(); ++k) {
        if (auto j = as_prefix_set(full.members[k])) {
            if (!equal_span(config.spaces[k], coordinate_subspace(prefix_set(full.n, *j)))) {
                return false;
            }
        }
    }
    for (size_t a = 0; a < full.members.size(); ++a) {
        for (size_t b = 0; b < full.members.size(); ++b) {
            if (a == b) continue;
            const Subset& ca = full.members[a];
            const Subset& cb = full.members[b];
            bool strict_subset = ca.size() < cb.size() && (ca.bits() & ~cb.bits()) == 0;
            if (strict_subset && !includes(config.spaces[a], config.spaces[b])) return false;
        }
    }
    return true;
}

bool theta_image_conditions(const Word& word, const WordConfiguration& config) {
    const int n = word.n;
    const size_t l = word.letters.size();
    if (config.word.n != n || config.word.letters != word.letters ||
        config.spaces.size() != l) {
        throw std::invalid_argument("configuration is not indexed by the word");
    }
    for (size_t k = 0; k < l; ++k) {
        if (config.spaces[k].n != n || config.spaces[k].dim() != word.letters[k]) {
            throw std::invalid_argument("subspace dimension differs from the letter");
        }
    }
    // The word builds a sequence of flags, each step replacing one level.
    // A configuration is in the image of that process exactly when every
    // replacement stays wedged between the current neighbouring levels: the
    // most recent earlier position with letter i_k + 1 above (standard
    // Q^{i_k + 1} before any such position) and the most recent earlier
    // position with letter i_k - 1 below (standard Q^{i_k - 1}, vacuous for
    // letter 1).  Later positions re-check their own neighbours, so this is
    // sufficient as well as necessary.
    for (size_t k = 0; k < l; ++k) {
        const int i = word.letters[k];
        int upper = -1, lower = -1;
        for (size_t m = 0; m < k; ++m) {
            if (word.letters[m] == i + 1) upper = static_cast<int>(m);
            if (word.letters[m] == i - 1) lower = static_cast<int>(m);
        }
        const Subspace& vk = config.spaces[k];
        if (upper >= 0) {
            if (!includes(vk, config.spaces[upper])) return false;
        } else if (!includes(vk, coordinate_subspace(prefix_set(n, i + 1)))) {
            return false;
        }
        if (i >= 2) {
            if (lower >= 0) {
                if (!includes(config.spaces[lower], vk)) return false;
            } else if (!includes(coordinate_subspace(prefix_set(n, i - 1)), vk)) {
                return false;
            }
        }
    }
    return true;
}

bool conjecture_conditions(const Configuration& config, bool flagged) {
    const SubsetFamily& d = config.family;
    if (d.members.size() > 12) {
        throw std::invalid_argument("conjecture sweep is guarded to 12 members");
    }
    if (config.spaces.size() != d.members.size()) {
        throw std::invalid_argument("configuration member count mismatch");
    }
    for (size_t k = 0; k < d.members.size(); ++k) {
        if (config.spaces[k].n != d.n) throw std::invalid_argument("ambient mismatch");
        if (config.spaces[k].dim() != d.members[k].size()) {
            throw std::invalid_argument("subspace dimension differs from member size");
        }
    }
    std::vector<Subset> members;
    std::vector<Subspace> spaces;
    if (flagged) {
        for (int j = 1; j <= d.n; ++j) {
            members.push_back(prefix_set(d.n, j));
            spaces.push_back(coordinate_subspace(prefix_set(d.n, j)));
        }
    }
    members.insert(members.end(), d.members.begin(), d.members.end());
    spaces.insert(spaces.end(), config.spaces.begin(), config.spaces.end());

    const size_t m = members.size();
    for (uint32_t sub = 1; sub < (1u << m); ++sub) {
        uint32_t meet = ~0u;
        uint32_t join = 0;
        std::vector<Subspace> chosen;
        for (size_t k = 0; k < m; ++k) {
            if (!((sub >> k) & 1u)) continue;
            meet &= members[k].bits();
            join |= members[k].bits();
            chosen.push_back(spaces[k]);
        }
        if (dim_intersection(chosen) < std::popcount(meet & ((1u << d.n) - 1u))) return false;
        if (dim_sum(chosen) > std::popcount(join)) return false;
    }
    return true;
}

std::optional<Configuration> member_configuration(const WordConfiguration& config) {
    SubsetFamily full = full_chamber_family(config.word);
    const int n = config.word.n;
    std::vector<std::pair<uint32_t, const Subspace*>> first;
    Permutation p(n);
    for (size_t k = 0; k < config.word.letters.size(); ++k) {
        p = right_mul(p, config.word.letters[k]);
        uint32_t bits = 0;
        for (int t = 1; t <= config.word.letters[k]; ++t) bits |= 1u << (p(t) - 1);
        const Subspace& v = config.spaces[k];
        bool fresh = true;
        for (const auto& [b, space] : first) {
            if (b == bits) {
                fresh = false;
                if (!equal_span(*space, v)) return std::nullopt;
            }
        }
        if (fresh) first.emplace_back(bits, &v);
    }
    Configuration out;
    out.family = full;
    for (const Subset& c : full.members) {
        if (auto j = as_prefix_set(c)) {
            out.spaces.push_back(coordinate_subspace(prefix_set(n, *j)));
            continue;
        }
        for (const auto& [b, space] : first) {
            if (b == c.bits()) {
                out.spaces.push_back(*space);
                break;
            }
        }
    }
    return out;
}

IntMatrix random_upper_triangular(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> nonzero(1, 18);
    IntMatrix g(n, n);
    for (int r = 0; r < n; ++r) {
        int v = nonzero(rng);
        g.at(r, r) = v <= 9 ? v : 9 - v;  // uniform over [-9,9] minus zero
        for (int c = r + 1; c < n; ++c) g.at(r, c) = entry(rng);
    }
    return g;
}

IntMatrix random_invertible(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    for (;;) {
        IntMatrix g(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) g.at(r, c) = entry(rng);
        if (rank(g) == n) return g;
    }
}

Subspace apply(const IntMatrix& g, const Subspace& v) {
    if (g.rows != v.n || g.cols != v.n) throw std::invalid_argument("matrix size mismatch");
    return Subspace(v.n, matmul(g, v.basis));
}

Configuration apply(const IntMatrix& g, const Configuration& config) {
    Configuration out;
    out.family = config.family;
    for (const Subspace& v : config.spaces) out.spaces.push_back(apply(g, v));
    return out;
}

WordConfiguration apply(const IntMatrix& g, const WordConfiguration& config) {
    WordConfiguration out;
    out.word = config.word;
    for (const Subspace& v : config.spaces) out.spaces.push_back(apply(g, v));
    return out;
}

std::vector<Subspace> parse_subspace_blocks(const std::string& text, int n) {
    std::vector<Subspace> out;
    std::vector<std::vector<Rat>> rows;
    auto flush = [&]() {
        if (rows.empty()) return;
        IntMatrix basis(n, static_cast<int>(rows.size()));
        for (size_t c = 0; c < rows.size(); ++c) {
            std::vector<Int> cleared = clear_denominators(rows[c]);
            for (int r = 0; r < n; ++r) basis.at(r, static_cast<int>(c)) = cleared[r];
        }
        out.emplace_back(n, std::move(basis));
        rows.clear();
    };
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            flush();
            continue;
        }
        std::istringstream ls(line);
        std::vector<Rat> vec;
        std::string tok;
        while (ls >> tok) vec.push_back(parse_rational(tok));
        if (static_cast<int>(vec.size()) != n) {
            throw std::invalid_argument("each basis vector needs " + std::to_string(n) +
                                        " entries");
        }
        rows.push_back(std::move(vec));
    }
    flush();
    return out;
}

std::string to_string(const Subspace& v) {
    std::ostringstream os;
    for (int c = 0; c < v.dim(); ++c) {
        for (int r = 0; r < v.n; ++r) {
            if (r > 0) os << ' ';
            os << v.basis.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace glncomb

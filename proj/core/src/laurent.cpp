#include "glncomb/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace glncomb {

namespace {

void check_index(int n, int i, const char* what) {
    if (i < 1 || i >= n) {
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(n - 1));
    }
}

}  // namespace

LaurentPoly::LaurentPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int n, const Int& c) {
    LaurentPoly f(n);
    f.add_term(std::vector<int>(n, 0), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(int n, const std::vector<int>& exps, const Int& c) {
    if (static_cast<int>(exps.size()) != n) {
        throw std::invalid_argument("exponent vector has wrong length");
    }
    LaurentPoly f(n);
    f.add_term(exps, c);
    return f;
}

LaurentPoly LaurentPoly::variable(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return monomial(n, e);
}

Int LaurentPoly::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const std::vector<int>& exps, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exps, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    LaurentPoly out(n_);
    std::vector<int> e(n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < n_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly swap_vars(int i, const LaurentPoly& f) {
    check_index(f.n(), i, "swap_vars");
    LaurentPoly out(f.n());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2 = e;
        std::swap(e2[i - 1], e2[i]);
        out.add_term(e2, c);
    }
    return out;
}

namespace {

// Divides g by (x_i - x_{i+1}).  Writing a = exp_i, b = exp_{i+1} and
// u = x_i / x_{i+1}, the terms with fixed remaining exponents and fixed
// t = a + b form a one-variable Laurent polynomial p(u), and
// g / (x_i - x_{i+1}) reduces classwise to p(u) / (u - 1), whose remainder
// is p(1).  Suffix sums of the coefficients give the quotient directly.
LaurentPoly divide_by_root(int i, const LaurentPoly& g) {
    const int n = g.n();
    struct ClassKey {
        std::vector<int> rest;
        int total;
        bool operator<(const ClassKey& o) const {
            return std::tie(rest, total) < std::tie(o.rest, o.total);
        }
    };
    std::map<ClassKey, std::map<int, Int>> classes;  // key -> (a -> coefficient)
    for (const auto& [e, c] : g.terms()) {
        ClassKey key;
        key.rest = e;
        int a = e[i - 1];
        key.total = e[i - 1] + e[i];
        key.rest[i - 1] = 0;
        key.rest[i] = 0;
        classes[key][a] += c;
    }
    LaurentPoly out(n);
    for (const auto& [key, coefs] : classes) {
        Int tail(0);
        for (const auto& [a, c] : coefs) tail += c;
        if (tail != 0) {
            throw std::logic_error("operator division left a remainder");
        }
        // d_m = sum of c_a over a > m, nonzero only between the extreme a's.
        Int suffix(0);
        auto it = coefs.rbegin();
        int prev_a = it->first;
        suffix = it->second;
        ++it;
        for (; it != coefs.rend(); ++it) {
            for (int m = prev_a - 1; m >= it->first; --m) {
                std::vector<int> e = key.rest;
                e[i - 1] = m;
                e[i] = key.total - 1 - m;
                out.add_term(e, suffix);
            }
            suffix += it->second;
            prev_a = it->first;
        }
    }
    return out;
}

}  // namespace

LaurentPoly divided_difference(int i, const LaurentPoly& f) {
    check_index(f.n(), i, "divided_difference");
    return divide_by_root(i, f - swap_vars(i, f));
}

LaurentPoly demazure(int i, const LaurentPoly& f) {
    check_index(f.n(), i, "demazure");
    LaurentPoly xi = LaurentPoly::variable(f.n(), i);
    LaurentPoly xi1 = LaurentPoly::variable(f.n(), i + 1);
    return divide_by_root(i, xi * f - xi1 * swap_vars(i, f));
}

LaurentPoly demazure_w(const Permutation& w, const LaurentPoly& f) {
    if (w.size() != f.n()) throw std::invalid_argument("size mismatch in demazure_w");
    Word word = lex_min_reduced_word(w);
    LaurentPoly out = f;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        out = demazure(*it, out);
    }
    return out;
}

LaurentPoly fundamental_weight(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<int> e(n, 0);
    for (int k = 0; k < i; ++k) e[k] = 1;
    return LaurentPoly::monomial(n, e);
}

Int eval_ones(const LaurentPoly& f) {
    Int total(0);
    for (const auto& [e, c] : f.terms()) total += c;
    return total;
}

std::vector<std::pair<std::vector<int>, Int>> sorted_terms(const LaurentPoly& f) {
    std::vector<std::pair<std::vector<int>, Int>> out(f.terms().begin(), f.terms().end());
    auto degree = [](const std::vector<int>& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        int da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    return out;
}

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(f)) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string vars;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += "x" + std::to_string(k + 1);
            if (e[k] != 1) vars += "^" + std::to_string(e[k]);
        }
        if (vars.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << vars;
        }
    }
    return os.str();
}

std::string poly_to_json(const LaurentPoly& f) {
    nlohmann::json j;
    j["n"] = f.n();
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : sorted_terms(f)) {
        nlohmann::json term;
        term["exps"] = e;
        term["coef"] = c.str();
        j["terms"].push_back(term);
    }
    return j.dump();
}

}  // namespace glncomb

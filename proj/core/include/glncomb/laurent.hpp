#pragma once
// Laurent polynomials in x_1..x_n with arbitrary-precision integer
// coefficients, and the divided-difference and Demazure operators on them.
//
// Exponent vectors have length n and may contain negative entries.  The
// operator for index i acts on the pair (x_i, x_{i+1}); both operator
// divisions are exact and raise logic_error if a remainder ever appears.

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glncomb/weyl.hpp"

namespace glncomb {

using Int = boost::multiprecision::cpp_int;

class LaurentPoly {
  public:
    using TermMap = std::map<std::vector<int>, Int>;

    explicit LaurentPoly(int n);
    static LaurentPoly constant(int n, const Int& c);
    static LaurentPoly monomial(int n, const std::vector<int>& exps, const Int& c = Int(1));
    static LaurentPoly variable(int n, int i);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(const std::vector<int>& exps) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Int& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    void add_term(const std::vector<int>& exps, const Int& c);

  private:
    int n_;
    TermMap terms_;  // no zero coefficients stored
};

// Exchanges x_i and x_{i+1}.
LaurentPoly swap_vars(int i, const LaurentPoly& f);

// (f - s_i f) / (x_i - x_{i+1}).
LaurentPoly divided_difference(int i, const LaurentPoly& f);

// (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}).
LaurentPoly demazure(int i, const LaurentPoly& f);

// Demazure operators along a reduced word for w, rightmost letter first.
LaurentPoly demazure_w(const Permutation& w, const LaurentPoly& f);

// x_1 x_2 ... x_i.
LaurentPoly fundamental_weight(int n, int i);

// Value at x_1 = ... = x_n = 1.
Int eval_ones(const LaurentPoly& f);

// Graded order: total degree descending, ties by exponent vector
// lexicographically descending.  to_string and poly_to_json both use it.
std::vector<std::pair<std::vector<int>, Int>> sorted_terms(const LaurentPoly& f);

std::string to_string(const LaurentPoly& f);
std::string poly_to_json(const LaurentPoly& f);

}  // namespace glncomb

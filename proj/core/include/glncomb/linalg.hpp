#pragma once
// Exact linear algebra over the integers and rationals: fraction-free rank,
// kernel bases, and the parsing helpers the geometry checks rely on.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glncomb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;  // row major

    IntMatrix() = default;
    IntMatrix(int r, int c);

    Int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Rank by Bareiss elimination; the input is copied, entries stay integral.
int rank(const IntMatrix& m);

// Columns form a basis of {x : m x = 0}, scaled to integer entries.
IntMatrix kernel_basis(const IntMatrix& m);

// Accepts "3", "-7/5".
Rat parse_rational(const std::string& text);
std::string to_string(const Rat& x);

// Scales a rational column by the common denominator.
std::vector<Int> clear_denominators(const std::vector<Rat>& column);

}  // namespace glncomb

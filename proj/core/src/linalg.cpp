#include "glncomb/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace glncomb {

IntMatrix::IntMatrix(int r, int c) : rows(r), cols(c) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    data.assign(static_cast<size_t>(r) * static_cast<size_t>(c), Int(0));
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("row mismatch in hconcat");
    IntMatrix out(a.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols; ++c) out.at(r, a.cols + c) = b.at(r, c);
    }
    return out;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("shape mismatch in matmul");
    IntMatrix out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(r, k) == 0) continue;
            for (int c = 0; c < b.cols; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return out;
}

int rank(const IntMatrix& m) {
    IntMatrix w = m;
    int rk = 0;
    Int prev(1);
    for (int col = 0; col < w.cols && rk < w.rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < w.rows; ++r) {
            if (w.at(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rk) {
            for (int c = 0; c < w.cols; ++c) std::swap(w.at(pivot, c), w.at(rk, c));
        }
        for (int r = rk + 1; r < w.rows; ++r) {
            for (int c = col + 1; c < w.cols; ++c) {
                w.at(r, c) = (w.at(r, c) * w.at(rk, col) - w.at(r, col) * w.at(rk, c)) / prev;
            }
            w.at(r, col) = 0;
        }
        prev = w.at(rk, col);
        ++rk;
    }
    return rk;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) w[r][c] = Rat(m.at(r, c));

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r) {
            if (w[r][col] != 0) { pr = r; break; }
        }
        if (pr < 0) continue;
        std::swap(w[pr], w[row]);
        Rat inv = w[row][col];
        for (int c = col; c < cols; ++c) w[row][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || w[r][col] == 0) continue;
            Rat f = w[r][col];
            for (int c = col; c < cols; ++c) w[r][c] -= f * w[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    IntMatrix out(cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        std::vector<Rat> vec(cols, Rat(0));
        vec[fc] = 1;
        for (size_t p = 0; p < pivot_col.size(); ++p) vec[pivot_col[p]] = -w[p][fc];
        std::vector<Int> cleared = clear_denominators(vec);
        for (int r = 0; r < cols; ++r) out.at(r, static_cast<int>(k)) = cleared[r];
    }
    return out;
}

Rat parse_rational(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            t.end());
    if (t.empty()) throw std::invalid_argument("empty rational");
    try {
        Rat x(t);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

std::string to_string(const Rat& x) { return x.str(); }

std::vector<Int> clear_denominators(const std::vector<Rat>& column) {
    Int lcm(1);
    for (const Rat& x : column) {
        Int d = boost::multiprecision::denominator(x);
        Int g = boost::multiprecision::gcd(lcm, d);
        lcm = lcm / g * d;
    }
    std::vector<Int> out;
    out.reserve(column.size());
    for (const Rat& x : column) {
        out.push_back(boost::multiprecision::numerator(x) *
                      (lcm / boost::multiprecision::denominator(x)));
    }
    return out;
}

}  // namespace glncomb

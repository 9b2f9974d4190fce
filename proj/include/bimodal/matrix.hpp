#pragma once

// Dense exact-integer matrices: arithmetic, fraction-free rank, column-space
// comparison, and det(I - tM) via Faddeev-LeVerrier.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bimodal/poly.hpp"

namespace bimodal {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, BigInt(0)) {
        if (rows <= 0 || cols <= 0) throw DimensionMismatch("matrix dimensions must be positive");
    }
    IntMatrix(int rows, int cols, std::vector<long> entries) : IntMatrix(rows, cols) {
        if (entries.size() != e_.size()) throw DimensionMismatch("entry count mismatch");
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = entries[i];
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const BigInt& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix sum dimension mismatch");
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference dimension mismatch");
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& a) {
        IntMatrix r = a;
        for (auto& v : r.e_) v = -v;
        return r;
    }
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    IntMatrix transposed() const {
        IntMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (v != 0) return false;
        return true;
    }

    BigInt trace() const {
        if (rows_ != cols_) throw NotSquare("trace of non-square matrix");
        BigInt t(0);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    // one 1 per row and per column, all other entries 0
    bool is_permutation() const {
        if (rows_ != cols_) return false;
        std::vector<int> colcount(static_cast<std::size_t>(cols_), 0);
        for (int i = 0; i < rows_; ++i) {
            int ones = 0;
            for (int j = 0; j < cols_; ++j) {
                const BigInt& v = at(i, j);
                if (v == 1) {
                    ++ones;
                    ++colcount[static_cast<std::size_t>(j)];
                } else if (v != 0) {
                    return false;
                }
            }
            if (ones != 1) return false;
        }
        for (int c : colcount)
            if (c != 1) return false;
        return true;
    }

    // rows of space-separated integers
    std::string to_text() const {
        std::string out;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) out += ' ';
                out += at(i, j).get_str();
            }
            out += '\n';
        }
        return out;
    }

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

// det(I - tM) as an exact integer polynomial, via Faddeev-LeVerrier over
// exact integers (every trace division is exact).
inline IntPolynomial char_poly_det_I_minus_tM(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("char_poly_det_I_minus_tM: matrix not square");
    const int n = m.rows();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    c[static_cast<std::size_t>(n)] = 1;
    IntMatrix acc = IntMatrix::identity(n); // N_{k-1}
    for (int k = 1; k <= n; ++k) {
        IntMatrix mk = m * acc;
        BigInt tr = mk.trace();
        BigInt ck;
        // c_{n-k} = -tr(M N_{k-1}) / k, always an exact division
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), BigInt(k).get_mpz_t());
        ck = -ck;
        c[static_cast<std::size_t>(n - k)] = ck;
        acc = mk;
        for (int i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    // det(lambda I - M) = sum c_k lambda^k  =>  det(I - tM) = sum c_{n-j} t^j
    std::vector<BigInt> rev(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) rev[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(n - j)];
    return IntPolynomial(std::move(rev));
}

// Rank over the rationals via fraction-free (Bareiss) elimination.
inline int rational_rank(const IntMatrix& m) {
    IntMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    int r = 0;
    BigInt prev(1);
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(w.at(pivot, j), w.at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                BigInt num = w.at(r, col) * w.at(i, j) - w.at(i, col) * w.at(r, j);
                BigInt q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = q;
            }
            w.at(i, col) = 0;
        }
        prev = w.at(r, col);
        ++r;
    }
    return r;
}

// True iff the rational column spaces of A and B coincide.
inline bool column_space_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("column_space_equal: row count mismatch");
    IntMatrix joint(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) joint.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) joint.at(i, a.cols() + j) = b.at(i, j);
    }
    int ra = rational_rank(a);
    int rb = rational_rank(b);
    int rj = rational_rank(joint);
    return ra == rb && rb == rj;
}

} // namespace bimodal

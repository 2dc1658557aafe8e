// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mshsp::gf2 {

/// Fixed-length bit vector over GF(2), packed 64 bits per word.
/// Length is immutable after construction; all binary operations require
/// matching lengths.
class BitVec {
  public:
    BitVec() : len_(0) {}

    explicit BitVec(size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(s.size());
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] == '1') {
                v.set(i, true);
            } else if (s[i] != '0') {
                throw std::invalid_argument("BitVec::from_string: expected only '0'/'1'");
            }
        }
        return v;
    }

    static BitVec unit(size_t len, size_t i) {
        BitVec v(len);
        v.set(i, true);
        return v;
    }

    size_t size() const { return len_; }

    bool get(size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(size_t i, bool value) {
        check_index(i);
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(size_t i) { set(i, !get(i)); }

    BitVec& operator^=(const BitVec& other) {
        check_len(other);
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    BitVec operator^(const BitVec& other) const {
        BitVec r = *this;
        r ^= other;
        return r;
    }

    BitVec operator&(const BitVec& other) const {
        check_len(other);
        BitVec r = *this;
        for (size_t w = 0; w < words_.size(); w++) {
            r.words_[w] &= other.words_[w];
        }
        return r;
    }

    BitVec operator|(const BitVec& other) const {
        check_len(other);
        BitVec r = *this;
        for (size_t w = 0; w < words_.size(); w++) {
            r.words_[w] |= other.words_[w];
        }
        return r;
    }

    /// Parity of the AND, i.e. the GF(2) inner product.
    bool dot(const BitVec& other) const {
        check_len(other);
        uint64_t acc = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    size_t popcount() const {
        size_t n = 0;
        for (uint64_t w : words_) {
            n += std::popcount(w);
        }
        return n;
    }

    /// Index of the first set bit, or size() if none.
    size_t first_set() const {
        for (size_t w = 0; w < words_.size(); w++) {
            if (words_[w]) {
                return (w << 6) + std::countr_zero(words_[w]);
            }
        }
        return len_;
    }

    bool operator==(const BitVec& other) const {
        return len_ == other.len_ && words_ == other.words_;
    }

    static BitVec concat(const BitVec& a, const BitVec& b) {
        BitVec r(a.size() + b.size());
        for (size_t i = 0; i < a.size(); i++) {
            r.set(i, a.get(i));
        }
        for (size_t i = 0; i < b.size(); i++) {
            r.set(a.size() + i, b.get(i));
        }
        return r;
    }

    BitVec slice(size_t begin, size_t len) const {
        if (begin + len > len_) {
            throw std::out_of_range("BitVec::slice out of range");
        }
        BitVec r(len);
        for (size_t i = 0; i < len; i++) {
            r.set(i, get(begin + i));
        }
        return r;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (size_t i = 0; i < len_; i++) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

  private:
    void check_index(size_t i) const {
        if (i >= len_) {
            throw std::out_of_range("BitVec index out of range");
        }
    }

    void check_len(const BitVec& other) const {
        if (len_ != other.len_) {
            throw std::invalid_argument("BitVec length mismatch");
        }
    }

    size_t len_;
    std::vector<uint64_t> words_;
};

/// Rectangular bit matrix stored as a list of equal-length rows.
/// Zero-row matrices are legal and mean "no constraints"; the column count
/// is still tracked.
class BitMatrix {
  public:
    BitMatrix() : ncols_(0) {}

    BitMatrix(size_t nrows, size_t ncols) : ncols_(ncols), rows_(nrows, BitVec(ncols)) {}

    explicit BitMatrix(size_t ncols) : ncols_(ncols) {}

    static BitMatrix identity(size_t n) {
        BitMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m.rows_[i].set(i, true);
        }
        return m;
    }

    static BitMatrix from_rows(std::vector<BitVec> rows, size_t ncols) {
        BitMatrix m(ncols);
        for (auto& r : rows) {
            m.append_row(std::move(r));
        }
        return m;
    }

    static BitMatrix from_strings(std::initializer_list<std::string_view> rows) {
        BitMatrix m;
        bool first = true;
        for (auto s : rows) {
            if (first) {
                m.ncols_ = s.size();
                first = false;
            }
            m.append_row(BitVec::from_string(s));
        }
        return m;
    }

    size_t nrows() const { return rows_.size(); }
    size_t ncols() const { return ncols_; }

    const BitVec& row(size_t i) const { return rows_.at(i); }
    const std::vector<BitVec>& rows() const { return rows_; }

    bool get(size_t r, size_t c) const { return rows_.at(r).get(c); }
    void set(size_t r, size_t c, bool v) { rows_.at(r).set(c, v); }

    void append_row(BitVec row) {
        if (row.size() != ncols_) {
            throw std::invalid_argument("BitMatrix::append_row: width mismatch");
        }
        rows_.push_back(std::move(row));
    }

    /// m · x over columns (x has length ncols, result length nrows).
    BitVec mul_vec(const BitVec& x) const {
        if (x.size() != ncols_) {
            throw std::invalid_argument("BitMatrix::mul_vec: width mismatch");
        }
        BitVec r(nrows());
        for (size_t i = 0; i < nrows(); i++) {
            r.set(i, rows_[i].dot(x));
        }
        return r;
    }

    bool operator==(const BitMatrix& other) const {
        return ncols_ == other.ncols_ && rows_ == other.rows_;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& r : rows_) {
            s += r.to_string();
            s += '\n';
        }
        return s;
    }

  private:
    size_t ncols_;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix matrix;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

/// Row-reduced echelon form with first-nonzero pivot selection, so the
/// output is reproducible across platforms. Row space is preserved.
inline RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.matrix = m;
    std::vector<BitVec> rows = m.rows();
    size_t r = 0;
    for (size_t c = 0; c < m.ncols() && r < rows.size(); c++) {
        size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
            }
        }
        res.pivot_cols.push_back(c);
        r++;
    }
    res.rank = r;
    res.matrix = BitMatrix::from_rows(std::move(rows), m.ncols());
    return res;
}

inline size_t rank(const BitMatrix& m) { return rref(m).rank; }

/// Basis of {x : m·x = 0 over GF(2)}, one row per basis vector.
/// nrows of the result = ncols(m) - rank(m).
inline BitMatrix nullspace(const BitMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (size_t c : rr.pivot_cols) {
        is_pivot[c] = true;
    }
    BitMatrix basis(m.ncols());
    for (size_t f = 0; f < m.ncols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec x(m.ncols());
        x.set(f, true);
        for (size_t i = 0; i < rr.pivot_cols.size(); i++) {
            if (rr.matrix.get(i, f)) {
                x.set(rr.pivot_cols[i], true);
            }
        }
        basis.append_row(std::move(x));
    }
    return basis;
}

/// Solve xᵀ·m = b for a coefficient vector x over the rows of m, i.e.
/// find a subset/combination of rows summing to b. Absence of a solution
/// is a normal return (empty optional).
inline std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
    if (b.size() != m.ncols()) {
        throw std::invalid_argument("gf2::solve: width mismatch");
    }
    // Eliminate while tracking the row combination producing each reduced row.
    std::vector<BitVec> rows = m.rows();
    std::vector<BitVec> combo;
    combo.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        combo.push_back(BitVec::unit(m.nrows(), i));
    }
    size_t r = 0;
    std::vector<size_t> pivot_cols;
    for (size_t c = 0; c < m.ncols() && r < rows.size(); c++) {
        size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        std::swap(combo[r], combo[pivot]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                combo[i] ^= combo[r];
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    BitVec residual = b;
    BitVec x(m.nrows());
    for (size_t i = 0; i < pivot_cols.size(); i++) {
        if (residual.get(pivot_cols[i])) {
            residual ^= rows[i];
            x ^= combo[i];
        }
    }
    if (residual.any()) {
        return std::nullopt;
    }
    return x;
}

/// True iff v lies in the row span of basis.
inline bool span_contains(const BitMatrix& basis, const BitVec& v) {
    if (v.size() != basis.ncols()) {
        throw std::invalid_argument("gf2::span_contains: width mismatch");
    }
    return solve(basis, v).has_value();
}

/// Annihilated subgroup: rows of `characters` are labels (q|p) over
/// Z2^N x Z2^N; returns a basis of K = {(t|w) : q·t + p·w = 0 for every
/// row}. The pairing q·t + p·w aligns q-blocks with t-blocks and p-blocks
/// with w-blocks, so K is the plain nullspace of the character matrix.
inline BitMatrix annihilated_subgroup(const BitMatrix& characters) {
    return nullspace(characters);
}

/// Maximal independent subset of the rows, in row order (greedy).
inline BitMatrix row_basis(const BitMatrix& m) {
    BitMatrix basis(m.ncols());
    for (size_t i = 0; i < m.nrows(); i++) {
        if (!span_contains(basis, m.row(i))) {
            basis.append_row(m.row(i));
        }
    }
    return basis;
}

}  // namespace mshsp::gf2

#pragma once

#include "cyclo/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cyclo::lin {

// Sparse vector: entries sorted by column index, no stored zeros.
class SparseVector {
public:
    SparseVector() = default;

    // entries need not be sorted; duplicates are summed, zeros dropped.
    explicit SparseVector(std::vector<std::pair<std::size_t, Rational>> entries);

    void set(std::size_t col, const Rational& value);
    void add(std::size_t col, const Rational& value);

    Rational get(std::size_t col) const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::size_t max_index() const; // entries_ must be nonempty

    const std::vector<std::pair<std::size_t, Rational>>& entries() const { return entries_; }

    SparseVector& operator+=(const SparseVector& rhs);
    SparseVector& operator-=(const SparseVector& rhs);
    SparseVector& operator*=(const Rational& c);
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(const Rational& c, SparseVector v) { return v *= c; }

    // a += c * b
    void add_scaled(const Rational& c, const SparseVector& b);

    bool operator==(const SparseVector& rhs) const { return entries_ == rhs.entries_; }

private:
    std::vector<std::pair<std::size_t, Rational>> entries_;
};

class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t ncols) : ncols_(ncols) {}

    void append_row(SparseVector row);
    const std::vector<SparseVector>& rows() const { return rows_; }
    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    void set_ncols(std::size_t n) { ncols_ = n; }

    SparseMatrix transposed() const;

private:
    std::vector<SparseVector> rows_;
    std::size_t ncols_ = 0;
};

enum class PivotRule {
    SmallestEntry, // default: smallest |pivot| in the pivot column
    FirstRow,      // first eligible row; the independent cross-check strategy
};

// Row-echelon form of a copy of m. Pivot columns come out strictly increasing.
struct Echelon {
    std::vector<SparseVector> rows;      // nonzero rows, leading entry 1
    std::vector<std::size_t> pivot_cols; // rows.size() entries
    std::size_t ncols = 0;

    std::size_t rank() const { return rows.size(); }
    bool is_pivot(std::size_t col) const;
    std::vector<std::size_t> free_cols() const;

    // Reduces v modulo the row space. Result has no support on pivot columns.
    SparseVector reduce(SparseVector v) const;
};

Echelon echelonize(const SparseMatrix& m, PivotRule rule = PivotRule::SmallestEntry);

// Streaming echelon for membership tests over large row sets: rows are
// absorbed one at a time in arrival order.
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(std::size_t ncols) { ech_.ncols = ncols; }
    // returns true if the row increased the rank
    bool insert(SparseVector row);
    bool contains(const SparseVector& v) const { return ech_.reduce(v).empty(); }
    const Echelon& echelon() const { return ech_; }

private:
    Echelon ech_;
};

std::size_t rank(const SparseMatrix& m, PivotRule rule = PivotRule::SmallestEntry);

// Basis of {x : m x = 0}; size ncols - rank.
std::vector<SparseVector> nullspace_basis(const SparseMatrix& m);

// True iff v is a Q-linear combination of the rows of m.
bool in_span(const SparseVector& v, const SparseMatrix& rows);
bool in_span(const SparseVector& v, const Echelon& ech);

// ngens - rank(relations); relations.ncols() must equal ngens.
std::size_t quotient_dim(std::size_t ngens, const SparseMatrix& relations);

Rational dot(const SparseVector& a, const SparseVector& b);

} // namespace cyclo::lin

#include "cyclo/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclo {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

} // namespace cyclo

namespace cyclo::lin {

SparseVector::SparseVector(std::vector<std::pair<std::size_t, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [col, val] : entries) {
        if (!entries_.empty() && entries_.back().first == col)
            entries_.back().second += val;
        else
            entries_.emplace_back(col, val);
        if (!entries_.empty() && is_zero(entries_.back().second)) entries_.pop_back();
    }
}

void SparseVector::set(std::size_t col, const Rational& value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) {
        if (is_zero(value))
            entries_.erase(it);
        else
            it->second = value;
    } else if (!is_zero(value)) {
        entries_.insert(it, {col, value});
    }
}

void SparseVector::add(std::size_t col, const Rational& value) {
    if (is_zero(value)) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) {
        it->second += value;
        if (is_zero(it->second)) entries_.erase(it);
    } else {
        entries_.insert(it, {col, value});
    }
}

Rational SparseVector::get(std::size_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) return it->second;
    return Rational(0);
}

std::size_t SparseVector::max_index() const {
    assert(!entries_.empty());
    return entries_.back().first;
}

void SparseVector::add_scaled(const Rational& c, const SparseVector& b) {
    if (is_zero(c) || b.entries_.empty()) return;
    std::vector<std::pair<std::size_t, Rational>> out;
    out.reserve(entries_.size() + b.entries_.size());
    auto ia = entries_.begin(), ea = entries_.end();
    auto ib = b.entries_.begin(), eb = b.entries_.end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            Rational v = c * ib->second;
            if (!is_zero(v)) out.emplace_back(ib->first, std::move(v));
            ++ib;
        } else {
            Rational v = ia->second + c * ib->second;
            if (!is_zero(v)) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    entries_ = std::move(out);
}

SparseVector& SparseVector::operator+=(const SparseVector& rhs) {
    add_scaled(Rational(1), rhs);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& rhs) {
    add_scaled(Rational(-1), rhs);
    return *this;
}

SparseVector& SparseVector::operator*=(const Rational& c) {
    if (is_zero(c)) {
        entries_.clear();
        return *this;
    }
    for (auto& [col, val] : entries_) val *= c;
    return *this;
}

Rational dot(const SparseVector& a, const SparseVector& b) {
    Rational acc(0);
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            acc += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

void SparseMatrix::append_row(SparseVector row) {
    if (!row.empty()) assert(row.max_index() < ncols_);
    rows_.push_back(std::move(row));
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(nrows());
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(ncols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r].entries()) cols[c].emplace_back(r, v);
    for (auto& col : cols) t.append_row(SparseVector(std::move(col)));
    return t;
}

bool Echelon::is_pivot(std::size_t col) const {
    return std::binary_search(pivot_cols.begin(), pivot_cols.end(), col);
}

std::vector<std::size_t> Echelon::free_cols() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (p < pivot_cols.size() && pivot_cols[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

SparseVector Echelon::reduce(SparseVector v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Rational c = v.get(pivot_cols[i]);
        if (!is_zero(c)) v.add_scaled(-c, rows[i]);
    }
    return v;
}

Echelon echelonize(const SparseMatrix& m, PivotRule rule) {
    // Echelon rows are kept in RREF; work rows stay reduced against the
    // echelon, so each new pivot only has to be eliminated once.
    std::vector<SparseVector> work;
    work.reserve(m.nrows());
    for (const auto& r : m.rows())
        if (!r.empty()) work.push_back(r);

    Echelon ech;
    ech.ncols = m.ncols();

    while (true) {
        std::erase_if(work, [](const SparseVector& r) { return r.empty(); });
        if (work.empty()) break;

        // Pick the next pivot: leftmost leading column, tie-broken by rule.
        std::size_t best = 0;
        std::size_t lead_col = SIZE_MAX;
        for (std::size_t i = 0; i < work.size(); ++i) {
            std::size_t c = work[i].entries().front().first;
            if (c < lead_col) {
                lead_col = c;
                best = i;
            } else if (c == lead_col && rule == PivotRule::SmallestEntry) {
                if (abs_less(work[i].entries().front().second,
                             work[best].entries().front().second))
                    best = i;
            }
        }

        SparseVector piv = std::move(work[best]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
        Rational inv = 1 / piv.entries().front().second;
        piv *= inv;

        // Eliminate the new pivot column from the remaining work rows.
        for (auto& r : work) {
            Rational c = r.get(lead_col);
            if (!is_zero(c)) r.add_scaled(-c, piv);
        }

        // Back-substitute into existing echelon rows to stay in RREF.
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            Rational c = ech.rows[i].get(lead_col);
            if (!is_zero(c)) ech.rows[i].add_scaled(-c, piv);
        }

        // Insert keeping pivot columns sorted.
        auto pos = std::lower_bound(ech.pivot_cols.begin(), ech.pivot_cols.end(), lead_col);
        std::size_t idx = static_cast<std::size_t>(pos - ech.pivot_cols.begin());
        ech.pivot_cols.insert(pos, lead_col);
        ech.rows.insert(ech.rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(piv));
    }
    return ech;
}

std::size_t rank(const SparseMatrix& m, PivotRule rule) {
    return echelonize(m, rule).rank();
}

bool IncrementalEchelon::insert(SparseVector row) {
    row = ech_.reduce(std::move(row));
    if (row.empty()) return false;
    std::size_t lead = row.entries().front().first;
    Rational inv = 1 / row.entries().front().second;
    row *= inv;
    for (std::size_t i = 0; i < ech_.rows.size(); ++i) {
        Rational c = ech_.rows[i].get(lead);
        if (!is_zero(c)) ech_.rows[i].add_scaled(-c, row);
    }
    auto pos = std::lower_bound(ech_.pivot_cols.begin(), ech_.pivot_cols.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - ech_.pivot_cols.begin());
    ech_.pivot_cols.insert(pos, lead);
    ech_.rows.insert(ech_.rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
}

std::vector<SparseVector> nullspace_basis(const SparseMatrix& m) {
    Echelon ech = echelonize(m);
    std::vector<SparseVector> basis;
    for (std::size_t fc : ech.free_cols()) {
        SparseVector x;
        x.set(fc, Rational(1));
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            Rational c = ech.rows[i].get(fc);
            if (!is_zero(c)) x.set(ech.pivot_cols[i], -c);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

bool in_span(const SparseVector& v, const Echelon& ech) {
    return ech.reduce(v).empty();
}

bool in_span(const SparseVector& v, const SparseMatrix& rows) {
    return in_span(v, echelonize(rows));
}

std::size_t quotient_dim(std::size_t ngens, const SparseMatrix& relations) {
    assert(relations.ncols() == ngens);
    return ngens - rank(relations);
}

} // namespace cyclo::lin

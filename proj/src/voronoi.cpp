#include "cyclo/voronoi.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cyclo::voronoi {

QuadForm::QuadForm(int n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
    assert(a_.size() == static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < r; ++c) assert(at(r, c) == at(c, r));
}

QuadForm QuadForm::identity(int n) {
    std::vector<Rational> a(static_cast<std::size_t>(n * n), Rational(0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = 1;
    return QuadForm(n, std::move(a));
}

QuadForm QuadForm::am_gram(int m) {
    // basis convention matching the consecutive-sum root configuration:
    // minimal vectors are the e_i and their consecutive sums
    std::vector<Rational> a(static_cast<std::size_t>(m * m), Rational(0));
    for (int i = 0; i < m; ++i) {
        a[static_cast<std::size_t>(i * m + i)] = 2;
        if (i + 1 < m) {
            a[static_cast<std::size_t>(i * m + i + 1)] = -1;
            a[static_cast<std::size_t>((i + 1) * m + i)] = -1;
        }
    }
    return QuadForm(m, std::move(a));
}

Rational QuadForm::eval(const IntVec& x) const {
    Rational s(0);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            s += at(r, c) * Rational(x[static_cast<std::size_t>(r)]) *
                 Rational(x[static_cast<std::size_t>(c)]);
    return s;
}

namespace {

// LDL^T pivots; semidefinite mode allows zero pivots with zero row remainder.
bool ldl_pivots(const QuadForm& q, bool strict) {
    int n = q.dim();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = q.at(r, c);
    for (int k = 0; k < n; ++k) {
        Rational piv = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        if (is_zero(piv)) {
            if (strict) return false;
            for (int j = k; j < n; ++j)
                if (!is_zero(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]))
                    return false;
            continue;
        }
        if (sgn(piv) < 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / piv;
            for (int j = k; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
    }
    return true;
}

} // namespace

bool QuadForm::positive_definite() const { return ldl_pivots(*this, true); }
bool QuadForm::positive_semidefinite() const { return ldl_pivots(*this, false); }

std::vector<IntVec> minimal_vectors(const QuadForm& q, long bound) {
    if (!q.positive_definite())
        throw std::runtime_error("minimal_vectors: form not positive definite");
    const int n = q.dim();
    std::vector<IntVec> best;
    Rational min_val;
    IntVec x(static_cast<std::size_t>(n), -bound);
    while (true) {
        bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
        if (!zero) {
            Rational val = q.eval(x);
            if (best.empty() || val < min_val) {
                best.clear();
                best.push_back(x);
                min_val = val;
            } else if (val == min_val) {
                best.push_back(x);
            }
        }
        std::size_t i = 0;
        for (; i < x.size(); ++i) {
            if (++x[i] <= bound) break;
            x[i] = -bound;
        }
        if (i == x.size()) break;
    }

    // certificate that nothing outside the box can attain the minimum:
    // q - c*I psd with min <= c * bound^2
    Rational c = min_val / Rational(bound) / Rational(bound);
    std::vector<Rational> shifted;
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
            Rational v = q.at(r, col);
            if (r == col) v -= c;
            shifted.push_back(v);
        }
    if (!QuadForm(n, std::move(shifted)).positive_semidefinite())
        throw std::runtime_error("minimal_vectors: enumeration bound too small to certify");
    return best;
}

int VCell::rank() const {
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : verts) {
        std::vector<Rational> r;
        for (long x : v) r.emplace_back(x);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    std::size_t ncols = verts.empty() ? 0 : verts[0].size();
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (!is_zero(rows[r][col])) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || is_zero(rows[r][col])) continue;
            Rational f = rows[r][col] / rows[static_cast<std::size_t>(rank)][col];
            for (std::size_t cc = col; cc < ncols; ++cc)
                rows[r][cc] -= f * rows[static_cast<std::size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

bool VCell::contains(const VCell& face) const {
    return std::includes(verts.begin(), verts.end(), face.verts.begin(), face.verts.end());
}

IntVec normalize_vertex(IntVec v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    assert(g != 0);
    for (long x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (long& y : v) y = -y;
        break;
    }
    return v;
}

namespace {

// integer rank by fraction-free elimination; entries stay small here
int int_rank(const std::vector<IntVec>& vs) {
    if (vs.empty()) return 0;
    std::vector<IntVec> rows = vs;
    std::size_t ncols = rows[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < ncols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
        const IntVec& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            long a = p[col], b = rows[r][col];
            for (std::size_t cc = 0; cc < ncols; ++cc) rows[r][cc] = a * rows[r][cc] - b * p[cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::pair<VCell, int> make_cell(const std::vector<IntVec>& ordered) {
    std::vector<IntVec> verts;
    verts.reserve(ordered.size());
    for (const auto& v : ordered) verts.push_back(normalize_vertex(v));
    // insertion sort with parity
    int sign = 1;
    for (std::size_t i = 1; i < verts.size(); ++i)
        for (std::size_t j = i; j > 0 && verts[j] < verts[j - 1]; --j) {
            std::swap(verts[j], verts[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (verts[i] == verts[i - 1]) return {VCell{}, 0};
    // cells of the rank-m complex must span the ambient lattice
    if (!verts.empty() && int_rank(verts) < static_cast<int>(verts[0].size())) return {VCell{}, 0};
    return {VCell{std::move(verts)}, sign};
}

void CellChain::add(const std::vector<IntVec>& ordered, const Rational& c) {
    auto [cell, sign] = make_cell(ordered);
    if (sign == 0) return;
    add(cell, Rational(sign) * c);
}

void CellChain::add(const VCell& cell, const Rational& c) {
    if (cyclo::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(cell, c);
    if (!inserted) {
        it->second += c;
        if (cyclo::is_zero(it->second)) terms_.erase(it);
    }
}

CellChain& CellChain::operator+=(const CellChain& rhs) {
    for (const auto& [cell, c] : rhs.terms_) add(cell, c);
    return *this;
}

CellChain& CellChain::operator-=(const CellChain& rhs) {
    for (const auto& [cell, c] : rhs.terms_) add(cell, -c);
    return *this;
}

CellChain& CellChain::operator*=(const Rational& c) {
    if (cyclo::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [cell, v] : terms_) v *= c;
    return *this;
}

CellChain boundary(const CellChain& c) {
    CellChain out;
    for (const auto& [cell, coeff] : c.terms()) {
        for (std::size_t i = 0; i < cell.verts.size(); ++i) {
            std::vector<IntVec> face;
            for (std::size_t j = 0; j < cell.verts.size(); ++j)
                if (j != i) face.push_back(cell.verts[j]);
            int sign = (i % 2 == 0) ? 1 : -1;
            out.add(face, Rational(sign) * coeff);
        }
    }
    return out;
}

VCell am_cell(const std::vector<IntVec>& basis) {
    const int m = static_cast<int>(basis.size());
    std::vector<IntVec> cycle = basis;
    IntVec last(basis[0].size(), 0);
    for (const auto& v : basis)
        for (std::size_t j = 0; j < last.size(); ++j) last[j] -= v[j];
    cycle.push_back(last);
    std::set<IntVec> verts;
    for (int s = 0; s < m + 1; ++s)
        for (int len = 1; len <= m; ++len) {
            IntVec v(basis[0].size(), 0);
            for (int t = 0; t < len; ++t)
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] += cycle[static_cast<std::size_t>((s + t) % (m + 1))][j];
            verts.insert(normalize_vertex(std::move(v)));
        }
    return VCell{{verts.begin(), verts.end()}};
}

namespace {

IntVec neg_sum(const std::vector<IntVec>& vs) {
    IntVec out(vs[0].size(), 0);
    for (const auto& v : vs)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= v[j];
    return out;
}

IntVec vadd(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
    return out;
}

} // namespace

CellChain psi2(const modular::BlockWedge& g) {
    CellChain out;
    if (g.blocks.size() == 1) {
        assert(g.blocks[0].size() == 2);
        const auto& v1 = g.blocks[0][0];
        const auto& v2 = g.blocks[0][1];
        out.add({v1, v2, neg_sum({v1, v2})}, Rational(1));
    } else {
        assert(g.blocks.size() == 2);
        out.add({g.blocks[0][0], g.blocks[1][0]}, Rational(1));
    }
    return out;
}

CellChain psi3(const modular::BlockWedge& g) {
    CellChain out;
    auto shape = g.shape();
    if (shape == std::vector<int>{1, 1, 1}) {
        out.add({g.blocks[0][0], g.blocks[1][0], g.blocks[2][0]}, Rational(1));
    } else if (shape == std::vector<int>{2, 1}) {
        const auto& v1 = g.blocks[0][0];
        const auto& v2 = g.blocks[0][1];
        out.add({v1, v2, neg_sum({v1, v2}), g.blocks[1][0]}, Rational(1));
    } else if (shape == std::vector<int>{1, 2}) {
        // [v1] ^ [v2,v3] = -[v2,v3] ^ [v1]
        const auto& v2 = g.blocks[1][0];
        const auto& v3 = g.blocks[1][1];
        out.add({v2, v3, neg_sum({v2, v3}), g.blocks[0][0]}, Rational(-1));
    } else if (shape == std::vector<int>{3}) {
        const auto& v1 = g.blocks[0][0];
        const auto& v2 = g.blocks[0][1];
        const auto& v3 = g.blocks[0][2];
        IntVec v4 = neg_sum({v1, v2, v3});
        out.add({v1, v2, v3, v4, vadd(v1, v2)}, Rational(1));
        out.add({v1, v2, v3, v4, vadd(v2, v3)}, Rational(-1));
    } else {
        assert(false && "unsupported shape for psi3");
    }
    return out;
}

namespace {

std::vector<std::vector<IntVec>> bounded_bases(int m, long bound) {
    std::vector<IntVec> box;
    IntVec v(static_cast<std::size_t>(m), -bound);
    while (true) {
        bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
        if (!zero) box.push_back(v);
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            if (++v[i] <= bound) break;
            v[i] = -bound;
        }
        if (i == v.size()) break;
    }
    std::vector<std::vector<IntVec>> out;
    std::vector<IntVec> acc;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            if (lat::is_basis(acc)) out.push_back(acc);
            return;
        }
        for (const auto& u : box) {
            acc.push_back(u);
            self(self, depth + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// image under psi of the transported differential of a block wedge
template <typename Psi>
CellChain psi_of_boundary(const modular::BlockWedge& bw, Psi&& psi) {
    CellChain out;
    for (const auto& [c, term] : modular::differential(bw)) {
        CellChain img = psi(term);
        img *= c;
        out += img;
    }
    return out;
}

// matches lhs == sign * rhs, fixing sign on first nonzero use
bool match_with_frozen_sign(int& sign, const CellChain& lhs, const CellChain& rhs) {
    if (lhs.is_zero() && rhs.is_zero()) return true;
    if (sign == 0) {
        CellChain plus = lhs;
        plus -= rhs;
        if (plus.is_zero()) {
            sign = 1;
            return true;
        }
        CellChain minus = lhs;
        minus += rhs;
        if (minus.is_zero()) {
            sign = -1;
            return true;
        }
        return false;
    }
    CellChain residual = rhs;
    residual *= Rational(sign);
    residual -= lhs;
    return residual.is_zero();
}

} // namespace

Psi2Report verify_psi2(long bound) {
    Psi2Report rep;
    for (const auto& basis : bounded_bases(2, bound)) {
        modular::BlockWedge bw{{basis}};
        CellChain lhs = boundary(psi2(bw));
        CellChain rhs = psi_of_boundary(bw, psi2);
        if (!match_with_frozen_sign(rep.frozen_sign, lhs, rhs)) return rep;
        ++rep.bases_checked;
    }
    rep.chain_map = rep.bases_checked > 0;
    return rep;
}

Psi3Report verify_psi3(long bound) {
    Psi3Report rep;
    auto bases = bounded_bases(3, bound);

    rep.first_shuffle_killed = true;
    for (const auto& b : bases) {
        CellChain img;
        for (const auto& arr : {std::vector<IntVec>{b[0], b[1], b[2]},
                                std::vector<IntVec>{b[1], b[0], b[2]},
                                std::vector<IntVec>{b[1], b[2], b[0]}})
            img += psi3(modular::BlockWedge{{arr}});
        if (!img.is_zero()) {
            rep.first_shuffle_killed = false;
            break;
        }
    }

    rep.second_shuffle_boundary = true;
    for (const auto& b : bases) {
        CellChain img;
        for (const auto& arr : {std::vector<IntVec>{b[0], b[1], b[2]},
                                std::vector<IntVec>{b[1], b[0], b[2]},
                                std::vector<IntVec>{b[1], b[2], b[0]}})
            img += psi3(modular::BlockWedge{{lat::colon_to_plain(arr)}});
        // the matching 5-simplex lives on the converted vectors
        auto v = lat::colon_to_plain(b);
        IntVec v4 = neg_sum({v[0], v[1], v[2]});
        CellChain simplex;
        simplex.add({v[0], v[1], v[2], v4, vadd(v[0], v[1]), vadd(v[1], v[2])}, Rational(1));
        if (!match_with_frozen_sign(rep.second_shuffle_sign, img, boundary(simplex))) {
            rep.second_shuffle_boundary = false;
            break;
        }
    }

    rep.chain_map = true;
    int sign1 = 0, sign2 = 0;
    for (const auto& b : bases) {
        modular::BlockWedge deg1{{b}};
        if (!match_with_frozen_sign(sign1, boundary(psi3(deg1)), psi_of_boundary(deg1, psi3))) {
            rep.chain_map = false;
            break;
        }
        modular::BlockWedge deg2{{{b[0], b[1]}, {b[2]}}};
        if (!match_with_frozen_sign(sign2, boundary(psi3(deg2)), psi_of_boundary(deg2, psi3))) {
            rep.chain_map = false;
            break;
        }
        ++rep.bases_checked;
    }
    return rep;
}

bool is_special_3cell(const VCell& cell) {
    if (cell.verts.size() != 4 || cell.rank() != 3) return false;
    // three of the vertices admit signs summing to zero
    for (int skip = 0; skip < 4; ++skip)
        for (int mask = 0; mask < 8; ++mask) {
            IntVec s(cell.verts[0].size(), 0);
            int bit = 0;
            for (int i = 0; i < 4; ++i) {
                if (i == skip) continue;
                long f = (mask >> bit) & 1 ? -1 : 1;
                for (std::size_t j = 0; j < s.size(); ++j)
                    s[j] += f * cell.verts[static_cast<std::size_t>(i)][j];
                ++bit;
            }
            if (std::all_of(s.begin(), s.end(), [](long x) { return x == 0; })) return true;
        }
    return false;
}

bool is_generic_3cell(const VCell& cell) {
    if (cell.verts.size() != 4 || cell.rank() != 3) return false;
    if (is_special_3cell(cell)) return false;
    // some sign choice makes the four vertices sum to zero
    for (int mask = 0; mask < 16; ++mask) {
        IntVec s(cell.verts[0].size(), 0);
        for (int i = 0; i < 4; ++i) {
            long f = (mask >> i) & 1 ? -1 : 1;
            for (std::size_t j = 0; j < s.size(); ++j)
                s[j] += f * cell.verts[static_cast<std::size_t>(i)][j];
        }
        if (std::all_of(s.begin(), s.end(), [](long x) { return x == 0; })) return true;
    }
    return false;
}

CokerReport coker_observations(long bound) {
    CokerReport rep;
    auto bases = bounded_bases(3, bound);
    rep.bases = bases.size();

    std::set<VCell> simplices;
    std::set<VCell> generic_cells;
    for (const auto& b : bases) {
        IntVec v4 = neg_sum({b[0], b[1], b[2]});
        auto [simplex, s1] = make_cell({b[0], b[1], b[2], v4, vadd(b[0], b[1]), vadd(b[1], b[2])});
        if (s1 != 0) simplices.insert(simplex);
        auto [cell, s2] = make_cell({b[0], b[1], b[2], v4});
        if (s2 != 0 && is_generic_3cell(cell)) generic_cells.insert(cell);
    }
    rep.simplices = simplices.size();
    rep.generic_cells = generic_cells.size();

    std::map<VCell, std::size_t> incidence;
    std::set<VCell> special_seen;
    rep.every_simplex_has_three_generic = true;
    for (const auto& s : simplices) {
        std::size_t generic_here = 0;
        for (int mask = 0; mask < (1 << 6); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
            std::vector<IntVec> sub;
            for (int i = 0; i < 6; ++i)
                if ((mask >> i) & 1) sub.push_back(s.verts[static_cast<std::size_t>(i)]);
            VCell face{sub};
            if (is_generic_3cell(face)) {
                ++generic_here;
                ++incidence[face];
            } else if (is_special_3cell(face)) {
                special_seen.insert(face);
            }
        }
        if (generic_here != 3) rep.every_simplex_has_three_generic = false;
    }
    rep.special_cells = special_seen.size();

    rep.every_generic_in_three_simplices = !generic_cells.empty();
    for (const auto& cell : generic_cells)
        if (incidence[cell] != 3) rep.every_generic_in_three_simplices = false;

    // the displayed standard triples
    {
        IntVec v1{1, 0, 0}, v2{0, 1, 0}, v3{0, 0, 1}, v4{-1, -1, -1};
        IntVec v12 = vadd(v1, v2), v23 = vadd(v2, v3), v13 = vadd(v1, v3);
        auto cell = make_cell({v1, v2, v3, v4}).first;
        std::vector<VCell> expected_simplices{
            make_cell({v1, v2, v3, v4, v12, v23}).first,
            make_cell({v2, v1, v3, v4, v12, v13}).first,
            make_cell({v2, v3, v1, v4, v23, v13}).first,
        };
        std::set<VCell> distinct(expected_simplices.begin(), expected_simplices.end());
        bool ok = distinct.size() == 3;
        for (const auto& s : expected_simplices)
            ok = ok && simplices.count(s) == 1 && s.contains(cell);

        IntVec mv1{-1, 0, 0}, mv2{0, -1, 0}, m23{0, -1, -1};
        std::vector<VCell> expected_cells{
            make_cell({v1, v2, v3, v4}).first,
            make_cell({v12, v4, v23, mv2}).first,
            make_cell({v12, v3, m23, mv1}).first,
        };
        std::set<VCell> distinct_cells(expected_cells.begin(), expected_cells.end());
        ok = ok && distinct_cells.size() == 3;
        auto std_simplex = make_cell({v1, v2, v3, v4, v12, v23}).first;
        for (const auto& c : expected_cells)
            ok = ok && is_generic_3cell(c) && std_simplex.contains(c);
        rep.standard_lists_match = ok;
    }
    return rep;
}

namespace {

std::string cell_text(const VCell& c) {
    std::string out;
    for (const auto& v : c.verts) {
        out += "(";
        for (std::size_t j = 0; j < v.size(); ++j) {
            out += std::to_string(v[j]);
            if (j + 1 < v.size()) out += ",";
        }
        out += ")";
    }
    return out;
}

} // namespace

void emit_incidence_table(long bound, std::ostream& os) {
    auto bases = bounded_bases(3, bound);
    std::set<VCell> simplices;
    std::set<VCell> generic_cells;
    for (const auto& b : bases) {
        IntVec v4 = neg_sum({b[0], b[1], b[2]});
        auto [simplex, s1] = make_cell({b[0], b[1], b[2], v4, vadd(b[0], b[1]), vadd(b[1], b[2])});
        if (s1 != 0) simplices.insert(simplex);
        auto [cell, s2] = make_cell({b[0], b[1], b[2], v4});
        if (s2 != 0 && is_generic_3cell(cell)) generic_cells.insert(cell);
    }
    std::map<VCell, std::vector<const VCell*>> incidence;
    for (const auto& s : simplices) {
        for (int mask = 0; mask < (1 << 6); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
            std::vector<IntVec> sub;
            for (int i = 0; i < 6; ++i)
                if ((mask >> i) & 1) sub.push_back(s.verts[static_cast<std::size_t>(i)]);
            VCell face{sub};
            if (generic_cells.count(face)) incidence[face].push_back(&s);
        }
    }
    os << "# generic 3-cells and their containing 5-simplices, entries <= " << bound << "\n";
    for (const auto& [cell, ss] : incidence) {
        os << cell_text(cell) << " :";
        for (const auto* s : ss) os << " " << cell_text(*s);
        os << "\n";
    }
}

} // namespace cyclo::voronoi

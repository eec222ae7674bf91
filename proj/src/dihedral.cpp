#include "cyclo/dihedral.hpp"

#include "cyclo/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>

namespace cyclo::dihedral {

using words::Composition;
using words::CyclicWord;
using words::Monomial;
using words::TPolynomial;

long DihedralWord::alpha0() const {
    long s = 0;
    for (long a : alphas) s += a;
    return words::mod_norm(-s, level);
}

namespace {

DihedralWord normalized(DihedralWord w) {
    for (long& a : w.alphas) a = words::mod_norm(a, w.level);
    return w;
}

DihedralWord reflect_base(const DihedralWord& w) {
    DihedralWord out;
    out.level = w.level;
    out.alphas.assign(w.alphas.rbegin(), w.alphas.rend());
    out.exps.assign(w.exps.rbegin(), w.exps.rend());
    return out;
}

std::vector<long> divisors_above_one(long n) {
    std::vector<long> out;
    for (long l = 2; l <= n; ++l)
        if (n % l == 0) out.push_back(l);
    return out;
}

// iterate all residue tuples in (Z/N)^m
bool next_tuple(std::vector<long>& t, long N) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (++t[i] < N) return true;
        t[i] = 0;
    }
    return false;
}

Rational pow_long(long base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= Rational(base);
    return r;
}

} // namespace

std::pair<DihedralWord, int> canonicalize(const DihedralWord& w) {
    // Rotating the underlying circle leaves the symbol unchanged (it is read
    // relative to the marked slot); the one residual symmetry is the
    // reflection fixing the marked slot, which permutes the non-base
    // t-variables among themselves and carries the character (-1)^{m+1}.
    DihedralWord start = normalized(w);
    const int m = start.depth();
    if (m == 1) return {start, 1};
    const int refl_sign = (m % 2 == 0) ? -1 : 1; // (-1)^{m+1}

    DihedralWord refl = reflect_base(start);
    if (refl == start)
        return {start, refl_sign == 1 ? 1 : 0}; // sign conflict: generator is zero
    if (refl < start) return {refl, refl_sign};
    return {start, 1};
}

GenIndexer::GenIndexer(long N, int w, int m) : N_(N), w_(w), m_(m) {
    comps_ = words::compositions(w, m);
    for (std::size_t i = 0; i < comps_.size(); ++i) comp_index_[comps_[i]] = i;
    std::size_t tuples = 1;
    for (int i = 0; i < m; ++i) tuples *= static_cast<std::size_t>(N);
    count_ = tuples * comps_.size();
}

DihedralWord GenIndexer::word(std::size_t idx) const {
    DihedralWord out;
    out.level = N_;
    std::size_t ci = idx % comps_.size();
    std::size_t ai = idx / comps_.size();
    out.exps = comps_[ci];
    out.alphas.resize(static_cast<std::size_t>(m_));
    for (int i = m_ - 1; i >= 0; --i) {
        out.alphas[static_cast<std::size_t>(i)] = static_cast<long>(ai % static_cast<std::size_t>(N_));
        ai /= static_cast<std::size_t>(N_);
    }
    return out;
}

std::size_t GenIndexer::index(const std::vector<long>& alphas, const Composition& exps) const {
    assert(alphas.size() == static_cast<std::size_t>(m_));
    std::size_t ai = 0;
    for (long a : alphas) ai = ai * static_cast<std::size_t>(N_) + static_cast<std::size_t>(words::mod_norm(a, N_));
    auto it = comp_index_.find(exps);
    assert(it != comp_index_.end());
    return ai * comps_.size() + it->second;
}

std::vector<Rational> SpaceBasis::reduce(const lin::SparseVector& raw) const {
    lin::SparseVector r = ech.reduce(raw);
    std::vector<Rational> out(basis_cols.size(), Rational(0));
    for (const auto& [col, val] : r.entries()) {
        auto it = std::lower_bound(basis_cols.begin(), basis_cols.end(), col);
        assert(it != basis_cols.end() && *it == col);
        out[static_cast<std::size_t>(it - basis_cols.begin())] = val;
    }
    return out;
}

std::vector<lin::SparseVector> extract_coefficients(
    const std::vector<std::pair<Rational, CyclicWord>>& identity, int w, int m,
    const GenIndexer& gi) {
    const int cap = w - m;
    std::map<Monomial, lin::SparseVector> rows;
    for (const auto& [coeff, word] : identity) {
        assert(word.depth() == m);
        for (const auto& [n, poly] : words::expand_word(word, cap)) {
            if (words::weight(n) != w) continue;
            std::vector<long> res;
            res.reserve(static_cast<std::size_t>(m));
            for (int i = 1; i <= m; ++i)
                res.push_back(words::mod_norm(word.slots[static_cast<std::size_t>(i)].res, word.level));
            std::size_t col = gi.index(res, n);
            for (const auto& [mono, pc] : poly.terms()) {
                if (words::total_degree(mono) != cap) continue;
                rows[mono].add(col, coeff * pc);
            }
        }
    }
    std::vector<lin::SparseVector> out;
    for (auto& [mono, row] : rows)
        if (!row.empty()) out.push_back(std::move(row));
    return out;
}

namespace {

// Ambient forms for nonhomogeneous words: t_0 = 0, t_i = var_{i-1}.
TPolynomial nonhom_form(int m, int slot) {
    if (slot == 0) return TPolynomial(static_cast<std::size_t>(m));
    return TPolynomial::variable(static_cast<std::size_t>(m), static_cast<std::size_t>(slot - 1));
}

// Ambient forms for homogeneous words: t_i = var_i for i < m, t_m = -sum.
TPolynomial hom_form(int m, int slot) {
    std::size_t nv = static_cast<std::size_t>(m);
    if (slot < m) return TPolynomial::variable(nv, static_cast<std::size_t>(slot));
    std::vector<Rational> coeffs(nv, Rational(-1));
    return TPolynomial::linear(nv, coeffs);
}

} // namespace

void DihedralAlgebra::append_nonhom_shuffle_rows(int w, int m, const GenIndexer& gi,
                                                 lin::SparseMatrix& out) const {
    if (m < 2) return;
    std::vector<long> x(static_cast<std::size_t>(m), 0);
    for (int k = 1; k <= m - 1; ++k) {
        auto perms = words::shuffles(k, m - k);
        std::vector<long> xs = x;
        std::fill(xs.begin(), xs.end(), 0);
        do {
            long x0 = 0;
            for (long v : xs) x0 += v;
            x0 = words::mod_norm(-x0, N_);
            std::vector<std::pair<Rational, CyclicWord>> identity;
            for (const auto& sigma : perms) {
                CyclicWord cw;
                cw.level = N_;
                cw.slots.push_back({x0, nonhom_form(m, 0)});
                for (int p = 0; p < m; ++p) {
                    int src = sigma.to_source[static_cast<std::size_t>(p)];
                    cw.slots.push_back({xs[static_cast<std::size_t>(src - 1)], nonhom_form(m, src)});
                }
                identity.emplace_back(Rational(1), std::move(cw));
            }
            for (auto& row : extract_coefficients(identity, w, m, gi)) out.append_row(std::move(row));
        } while (next_tuple(xs, N_));
    }
}

void DihedralAlgebra::append_hom_shuffle_rows(int w, int m, const GenIndexer& gi,
                                              lin::SparseMatrix& out) const {
    if (m < 2) return;
    std::vector<long> g(static_cast<std::size_t>(m), 0);
    for (int k = 1; k <= m - 1; ++k) {
        auto perms = words::shuffles(k, m - k);
        std::vector<long> gs = g;
        std::fill(gs.begin(), gs.end(), 0);
        do {
            std::vector<std::pair<Rational, CyclicWord>> identity;
            for (const auto& sigma : perms) {
                CyclicWord hom;
                hom.level = N_;
                hom.slots.push_back({0, hom_form(m, 0)});
                for (int p = 0; p < m; ++p) {
                    int src = sigma.to_source[static_cast<std::size_t>(p)];
                    hom.slots.push_back({gs[static_cast<std::size_t>(src - 1)], hom_form(m, src)});
                }
                identity.emplace_back(Rational(1), words::hom_to_nonhom(hom));
            }
            for (auto& row : extract_coefficients(identity, w, m, gi)) out.append_row(std::move(row));
        } while (next_tuple(gs, N_));
    }
}

void DihedralAlgebra::append_lattice_shuffle_rows(int w, int m, const GenIndexer& gi,
                                                  lin::SparseMatrix& out) const {
    // The integral-side shuffle family in the lattice normalization: each
    // shuffle term is the colon-rewritten arrangement, with residues and
    // t-forms tracking the arrangement vectors linearly (base slot gauged
    // to zero). This is the normalization under which the rank-m modular
    // complex maps onto the coalgebra degreewise.
    if (m < 2) return;
    auto e = lat::standard_basis(m);
    for (int k = 1; k <= m - 1; ++k) {
        std::vector<lat::IntMat> gs;
        for (const auto& sigma : words::shuffles(k, m - k)) {
            std::vector<lat::IntVec> arr;
            for (int p = 0; p < m; ++p)
                arr.push_back(
                    e[static_cast<std::size_t>(sigma.to_source[static_cast<std::size_t>(p)] - 1)]);
            gs.push_back(lat::IntMat::from_columns(lat::colon_to_plain(arr)));
        }
        std::vector<long> xs(static_cast<std::size_t>(m), 0);
        do {
            std::vector<std::pair<Rational, CyclicWord>> identity;
            for (const auto& g : gs) {
                CyclicWord cw;
                cw.level = N_;
                long beta = 0;
                std::vector<words::WordSlot> slots;
                for (int i = 0; i < m; ++i) {
                    long res = 0;
                    for (int r = 0; r < m; ++r)
                        res += xs[static_cast<std::size_t>(r)] * g.at(r, i);
                    res = words::mod_norm(res, N_);
                    beta += res;
                    std::vector<Rational> coeffs;
                    for (int j = 0; j < m; ++j) coeffs.emplace_back(g.at(j, i));
                    slots.push_back(
                        {res, TPolynomial::linear(static_cast<std::size_t>(m), coeffs)});
                }
                cw.slots.push_back(
                    {words::mod_norm(-beta, N_), TPolynomial(static_cast<std::size_t>(m))});
                TPolynomial acc(static_cast<std::size_t>(m));
                for (auto& s : slots) {
                    acc += s.form;
                    cw.slots.push_back({s.res, acc});
                }
                identity.emplace_back(Rational(1), std::move(cw));
            }
            for (auto& row : extract_coefficients(identity, w, m, gi))
                out.append_row(std::move(row));
        } while (next_tuple(xs, N_));
    }
}

void DihedralAlgebra::append_distribution_rows(int w, int m, const GenIndexer& gi,
                                               lin::SparseMatrix& out) const {
    const auto comps = words::compositions(w, m);

    for (long l : divisors_above_one(N_)) {
        long q = N_ / l;
        std::vector<long> xi(static_cast<std::size_t>(m), 0);
        do {
            // representatives: rows only depend on xi mod q
            bool rep = true;
            for (long v : xi)
                if (v >= q) { rep = false; break; }
            if (!rep) continue;

            std::vector<long> lhs(xi.size());
            for (std::size_t i = 0; i < xi.size(); ++i) lhs[i] = words::mod_norm(l * xi[i], N_);
            if (w == 1 && m == 1 && lhs[0] == 0) continue; // the excepted relation

            // all eta with l*eta == l*xi (mod N)
            std::vector<std::vector<long>> etas;
            std::vector<long> d(xi.size(), 0);
            do {
                std::vector<long> eta(xi.size());
                for (std::size_t i = 0; i < xi.size(); ++i)
                    eta[i] = words::mod_norm(xi[i] + d[i] * q, N_);
                etas.push_back(std::move(eta));
            } while (next_tuple(d, l));

            Rational scale = pow_long(l, w - m);
            for (const auto& n : comps) {
                lin::SparseVector row;
                row.add(gi.index(lhs, n), Rational(1));
                for (const auto& eta : etas) row.add(gi.index(eta, n), -scale);
                if (!row.empty()) out.append_row(std::move(row));
            }
        } while (next_tuple(xi, N_));
    }

    // l = -1 (inversion)
    int inv_sign = ((w - m) % 2 == 0) ? 1 : -1; // (-1)^{w-m}
    std::vector<long> xi(static_cast<std::size_t>(m), 0);
    do {
        std::vector<long> neg(xi.size());
        for (std::size_t i = 0; i < xi.size(); ++i) neg[i] = words::mod_norm(-xi[i], N_);
        for (const auto& n : comps) {
            lin::SparseVector row;
            row.add(gi.index(neg, n), Rational(1));
            row.add(gi.index(xi, n), Rational(-inv_sign));
            if (!row.empty()) out.append_row(std::move(row));
        }
    } while (next_tuple(xi, N_));
}

void DihedralAlgebra::append_dihedral_rows(int w, int m, const GenIndexer& gi,
                                           lin::SparseMatrix& out) const {
    const int refl_sign = (m % 2 == 0) ? -1 : 1; // (-1)^{m+1}
    std::vector<long> a(static_cast<std::size_t>(m), 0);
    do {
        long a0 = 0;
        for (long v : a) a0 += v;
        a0 = words::mod_norm(-a0, N_);

        CyclicWord word;
        word.level = N_;
        word.slots.push_back({a0, nonhom_form(m, 0)});
        for (int i = 1; i <= m; ++i)
            word.slots.push_back({a[static_cast<std::size_t>(i - 1)], nonhom_form(m, i)});

        // rotation: word = rotated word (expansion at the next base slot)
        {
            std::vector<std::pair<Rational, CyclicWord>> identity;
            identity.emplace_back(Rational(1), word);
            identity.emplace_back(Rational(-1), word.rotated(1));
            for (auto& row : extract_coefficients(identity, w, m, gi)) out.append_row(std::move(row));
        }
        // reflection: word = (-1)^{m+1} * fully reversed word
        {
            CyclicWord rev;
            rev.level = N_;
            for (std::size_t i = word.slots.size(); i-- > 0;) rev.slots.push_back(word.slots[i]);
            std::vector<std::pair<Rational, CyclicWord>> identity;
            identity.emplace_back(Rational(1), word);
            identity.emplace_back(Rational(-refl_sign), std::move(rev));
            for (auto& row : extract_coefficients(identity, w, m, gi)) out.append_row(std::move(row));
        }
    } while (next_tuple(a, N_));
}

lin::SparseMatrix DihedralAlgebra::relation_matrix(int w, int m, unsigned families) const {
    GenIndexer gi(N_, w, m);
    lin::SparseMatrix out(gi.size());
    if (families & RelNonhomShuffle) append_nonhom_shuffle_rows(w, m, gi, out);
    if (families & RelHomShuffle) append_hom_shuffle_rows(w, m, gi, out);
    if (families & RelDistribution) append_distribution_rows(w, m, gi, out);
    if (families & RelDihedralSym) append_dihedral_rows(w, m, gi, out);
    if (families & RelLatticeShuffle) append_lattice_shuffle_rows(w, m, gi, out);
    return out;
}

const SpaceBasis& DihedralAlgebra::space(int w, int m) {
    auto key = std::make_pair(w, m);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return it->second;

    SpaceBasis sb;
    sb.N = N_;
    sb.w = w;
    sb.m = m;
    if (w < m || m < 1) {
        sb.ngens = 0;
        spaces_.emplace(key, std::move(sb));
        return spaces_.at(key);
    }
    GenIndexer gi(N_, w, m);
    sb.ngens = gi.size();
    sb.ech = lin::echelonize(relation_matrix(w, m));
    sb.basis_cols = sb.ech.free_cols();
    spaces_.emplace(key, std::move(sb));
    return spaces_.at(key);
}

std::size_t DihedralAlgebra::dimension(int w, int m) { return space(w, m).dim(); }

DihedralAlgebra::RawCobracket DihedralAlgebra::cobracket_raw(const DihedralWord& gen) const {
    const int m = gen.depth();
    const int w = gen.weight();
    RawCobracket out;
    if (m < 2) return out;
    const int cap = w - m;

    auto slot_res = [&](int idx) -> long {
        int r = ((idx % (m + 1)) + (m + 1)) % (m + 1);
        return r == 0 ? gen.alpha0() : gen.alphas[static_cast<std::size_t>(r - 1)];
    };
    auto slot_form = [&](int idx) -> TPolynomial {
        int r = ((idx % (m + 1)) + (m + 1)) % (m + 1);
        return nonhom_form(m, r);
    };

    Monomial target(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        target[static_cast<std::size_t>(i)] = gen.exps[static_cast<std::size_t>(i)] - 1;

    for (int i = 1; i <= m - 1; ++i) {
        for (int j = 0; j <= m; ++j) {
            long ysum = 0, xsum = 0;
            for (int a = j + i + 1; a <= j + m; ++a) ysum += slot_res(a);
            for (int a = j + 1; a <= j + i; ++a) xsum += slot_res(a);
            long y = words::mod_norm(-ysum, N_);
            long x = words::mod_norm(-xsum, N_);

            CyclicWord w1;
            w1.level = N_;
            w1.slots.push_back({slot_res(j + i + 1), slot_form(j + i + 1)});
            for (int a = j + i + 2; a <= j + m; ++a) w1.slots.push_back({slot_res(a), slot_form(a)});
            w1.slots.push_back({y, slot_form(j)});

            CyclicWord w2;
            w2.level = N_;
            w2.slots.push_back({x, slot_form(j)});
            for (int a = j + 1; a <= j + i; ++a) w2.slots.push_back({slot_res(a), slot_form(a)});

            auto e1 = words::expand_word(w1, cap);
            auto e2 = words::expand_word(w2, cap);
            for (const auto& [p, poly1] : e1) {
                for (const auto& [q, poly2] : e2) {
                    if (words::weight(p) + words::weight(q) != w) continue;
                    // coefficient of `target` in poly1*poly2
                    Rational c(0);
                    for (const auto& [mono, c1] : poly1.terms()) {
                        Monomial rest(mono.size());
                        bool ok = true;
                        for (std::size_t t = 0; t < mono.size(); ++t) {
                            rest[t] = target[t] - mono[t];
                            if (rest[t] < 0) { ok = false; break; }
                        }
                        if (!ok) continue;
                        c += c1 * poly2.coefficient(rest);
                    }
                    if (is_zero(c)) continue;
                    // global sign fixed so that the lattice differential
                    // maps onto the cobracket degreewise (it also matches
                    // the signs of the displayed depth-2 example)
                    c = -c;

                    DihedralWord f1;
                    f1.level = N_;
                    for (std::size_t s = 1; s < w1.slots.size(); ++s)
                        f1.alphas.push_back(words::mod_norm(w1.slots[s].res, N_));
                    f1.exps = p;
                    DihedralWord f2;
                    f2.level = N_;
                    for (std::size_t s = 1; s < w2.slots.size(); ++s)
                        f2.alphas.push_back(words::mod_norm(w2.slots[s].res, N_));
                    f2.exps = q;
                    out.push_back({{std::move(f1), std::move(f2)}, c});
                }
            }
        }
    }
    return out;
}

namespace {

// dedup/accumulate helper for key-coefficient maps
template <typename K>
void accumulate(std::map<K, Rational>& acc, const K& k, const Rational& c) {
    auto [it, inserted] = acc.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) acc.erase(it);
    }
}

} // namespace

std::vector<std::pair<std::pair<FactorKey, FactorKey>, Rational>>
DihedralAlgebra::cobracket_wedge(const FactorKey& key) {
    auto bkey = std::make_pair(key.w, key.m);
    auto it = cobracket_cache_.find(bkey);
    if (it == cobracket_cache_.end()) {
        const SpaceBasis& sb = space(key.w, key.m);
        GenIndexer gi(N_, key.w, key.m);
        std::vector<std::vector<std::pair<std::pair<FactorKey, FactorKey>, Rational>>> table;
        table.resize(sb.dim());
        for (std::size_t bi = 0; bi < sb.dim(); ++bi) {
            DihedralWord gen = gi.word(sb.basis_cols[bi]);
            std::map<std::pair<FactorKey, FactorKey>, Rational> acc;
            for (const auto& [pair, c] : cobracket_raw(gen)) {
                const auto& [wa, wb] = pair;
                const SpaceBasis& sa = space(wa.weight(), wa.depth());
                const SpaceBasis& sb2 = space(wb.weight(), wb.depth());
                if (sa.dim() == 0 || sb2.dim() == 0) continue;
                GenIndexer ga(N_, wa.weight(), wa.depth());
                GenIndexer gb(N_, wb.weight(), wb.depth());
                lin::SparseVector va, vb;
                va.set(ga.index(wa), Rational(1));
                vb.set(gb.index(wb), Rational(1));
                std::vector<Rational> ca = sa.reduce(va);
                std::vector<Rational> cb = sb2.reduce(vb);
                for (std::size_t ia = 0; ia < ca.size(); ++ia) {
                    if (is_zero(ca[ia])) continue;
                    for (std::size_t ib = 0; ib < cb.size(); ++ib) {
                        if (is_zero(cb[ib])) continue;
                        FactorKey ka{wa.depth(), wa.weight(), ia};
                        FactorKey kb{wb.depth(), wb.weight(), ib};
                        if (ka == kb) continue;
                        Rational term = c * ca[ia] * cb[ib];
                        if (kb < ka) {
                            std::swap(ka, kb);
                            term = -term;
                        }
                        accumulate(acc, std::make_pair(ka, kb), term);
                    }
                }
            }
            table[bi].assign(acc.begin(), acc.end());
        }
        it = cobracket_cache_.emplace(bkey, std::move(table)).first;
    }
    return it->second[key.idx];
}

bool DihedralAlgebra::coantisymmetry_holds(int w, int m) {
    GenIndexer gi(N_, w, m);
    lin::SparseMatrix rels = relation_matrix(w, m);

    // wedge-normalized cobracket per raw generator, memoized across rows
    std::map<std::size_t, std::vector<std::pair<std::pair<FactorKey, FactorKey>, Rational>>> memo;
    auto delta_wedge = [&](std::size_t col,
                           std::map<std::pair<FactorKey, FactorKey>, Rational>& acc,
                           const Rational& scale) {
        auto mit = memo.find(col);
        if (mit != memo.end()) {
            for (const auto& [key, c] : mit->second) accumulate(acc, key, scale * c);
            return;
        }
        std::map<std::pair<FactorKey, FactorKey>, Rational> local;
        DihedralWord gen = gi.word(col);
        for (const auto& [pair, c] : cobracket_raw(gen)) {
            const auto& [wa, wb] = pair;
            const SpaceBasis& sa = space(wa.weight(), wa.depth());
            const SpaceBasis& sbb = space(wb.weight(), wb.depth());
            if (sa.dim() == 0 || sbb.dim() == 0) continue;
            GenIndexer ga(N_, wa.weight(), wa.depth());
            GenIndexer gb(N_, wb.weight(), wb.depth());
            lin::SparseVector va, vb;
            va.set(ga.index(wa), Rational(1));
            vb.set(gb.index(wb), Rational(1));
            std::vector<Rational> ca = sa.reduce(va);
            std::vector<Rational> cb = sbb.reduce(vb);
            for (std::size_t ia = 0; ia < ca.size(); ++ia)
                for (std::size_t ib = 0; ib < cb.size(); ++ib) {
                    Rational term = c * ca[ia] * cb[ib];
                    if (is_zero(term)) continue;
                    FactorKey ka{wa.depth(), wa.weight(), ia};
                    FactorKey kb{wb.depth(), wb.weight(), ib};
                    if (ka == kb) continue;
                    if (kb < ka) {
                        std::swap(ka, kb);
                        term = -term;
                    }
                    accumulate(local, std::make_pair(ka, kb), term);
                }
        }
        auto& stored = memo[col];
        stored.assign(local.begin(), local.end());
        for (const auto& [key, c] : stored) accumulate(acc, key, scale * c);
    };

    for (const auto& row : rels.rows()) {
        std::map<std::pair<FactorKey, FactorKey>, Rational> acc;
        for (const auto& [col, val] : row.entries()) delta_wedge(col, acc, val);
        if (!acc.empty()) return false;
    }
    return true;
}

std::vector<WedgeTuple> DihedralAlgebra::wedge_basis(int w, int m, int r) {
    std::vector<WedgeTuple> out;
    if (r < 1 || m < r || w < m) return out;
    WedgeTuple acc;
    auto rec = [&](auto&& self, int w_rem, int m_rem, int slots, bool has_last,
                   FactorKey last) -> void {
        if (slots == 0) {
            if (w_rem == 0 && m_rem == 0) out.push_back(acc);
            return;
        }
        int max_depth = m_rem - (slots - 1);
        for (int mp = 1; mp <= max_depth; ++mp) {
            int max_weight = w_rem - (m_rem - mp); // remaining factors need weight >= depth
            for (int wp = mp; wp <= max_weight; ++wp) {
                if (has_last && (mp < last.m || (mp == last.m && wp < last.w))) continue;
                std::size_t d = space(wp, mp).dim();
                std::size_t start = 0;
                if (has_last && mp == last.m && wp == last.w) start = last.idx + 1;
                for (std::size_t idx = start; idx < d; ++idx) {
                    FactorKey k{mp, wp, idx};
                    acc.push_back(k);
                    self(self, w_rem - wp, m_rem - mp, slots - 1, true, k);
                    acc.pop_back();
                }
            }
        }
    };
    rec(rec, w, m, r, false, FactorKey{});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// sorts keys into strictly increasing order; returns 0 if any repeat
int sort_sign(std::vector<FactorKey>& keys) {
    int sign = 1;
    for (std::size_t i = 1; i < keys.size(); ++i)
        for (std::size_t j = i; j > 0 && keys[j] < keys[j - 1]; --j) {
            std::swap(keys[j], keys[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (keys[i] == keys[i - 1]) return 0;
    return sign;
}

} // namespace

CochainComplex DihedralAlgebra::cochain_complex(int w, int m) {
    CochainComplex cc;
    cc.N = N_;
    cc.w = w;
    cc.m = m;
    cc.bases.resize(static_cast<std::size_t>(m));
    for (int r = 1; r <= m; ++r)
        cc.bases[static_cast<std::size_t>(r - 1)] = wedge_basis(w, m, r);

    cc.diff.resize(static_cast<std::size_t>(m));
    static const std::vector<WedgeTuple> no_target;
    for (int r = 1; r <= m; ++r) {
        const auto& src = cc.bases[static_cast<std::size_t>(r - 1)];
        const auto& dst = r < m ? cc.bases[static_cast<std::size_t>(r)] : no_target;
        std::map<WedgeTuple, std::size_t> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = i;

        BasedMap d;
        d.images.set_ncols(dst.size());
        for (const auto& tuple : src) {
            std::map<std::size_t, Rational> img;
            for (std::size_t s = 0; s < tuple.size(); ++s) {
                int leib = (s % 2 == 0) ? 1 : -1; // (-1)^{s}
                for (const auto& [pair, c] : cobracket_wedge(tuple[s])) {
                    WedgeTuple keys;
                    keys.reserve(tuple.size() + 1);
                    for (std::size_t a = 0; a < s; ++a) keys.push_back(tuple[a]);
                    keys.push_back(pair.first);
                    keys.push_back(pair.second);
                    for (std::size_t a = s + 1; a < tuple.size(); ++a) keys.push_back(tuple[a]);
                    int sign = sort_sign(keys);
                    if (sign == 0) continue;
                    auto it = dst_index.find(keys);
                    assert(it != dst_index.end());
                    Rational term = Rational(leib * sign) * c;
                    auto [mit, ins] = img.emplace(it->second, term);
                    if (!ins) {
                        mit->second += term;
                        if (is_zero(mit->second)) img.erase(mit);
                    }
                }
            }
            lin::SparseVector row;
            for (const auto& [col, val] : img) row.set(col, val);
            d.images.append_row(std::move(row));
        }
        cc.diff[static_cast<std::size_t>(r - 1)] = std::move(d);
    }
    return cc;
}

std::vector<std::size_t> CochainComplex::dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : bases) out.push_back(b.size());
    return out;
}

long CochainComplex::euler_characteristic() const {
    long chi = 0;
    int sign = 1;
    for (const auto& b : bases) {
        chi += sign * static_cast<long>(b.size());
        sign = -sign;
    }
    return chi;
}

BasedMap compose(const BasedMap& first, const BasedMap& then) {
    BasedMap out;
    out.images.set_ncols(then.dst_dim());
    for (const auto& row : first.images.rows()) {
        lin::SparseVector img;
        for (const auto& [col, val] : row.entries())
            img.add_scaled(val, then.images.rows()[col]);
        out.images.append_row(std::move(img));
    }
    return out;
}

bool is_zero_map(const BasedMap& m) {
    for (const auto& row : m.images.rows())
        if (!row.empty()) return false;
    return true;
}

std::vector<std::size_t> DihedralAlgebra::cohomology_dims(int w, int m) {
    CochainComplex cc = cochain_complex(w, m);
    std::vector<std::size_t> out;
    std::size_t prev_rank = 0;
    for (int r = 1; r <= m; ++r) {
        std::size_t dim_r = cc.bases[static_cast<std::size_t>(r - 1)].size();
        std::size_t rank_r = lin::rank(cc.diff[static_cast<std::size_t>(r - 1)].images);
        out.push_back(dim_r - rank_r - prev_rank);
        prev_rank = rank_r;
    }
    return out;
}

std::size_t dimension(long N, int w, int m) {
    DihedralAlgebra alg(N);
    return alg.dimension(w, m);
}

long depth1_dimension_formula(int w) { return w % 2 == 1 ? 1 : 0; }

long depth2_dimension_formula(int w) {
    if (w % 2 != 0 || w < 2) return 0;
    return (w - 2) / 6;
}

long depth3_dimension_formula(int w) {
    if (w % 2 != 1 || w < 3) return 0;
    long t = static_cast<long>(w - 3) * (w - 3) - 1;
    return t / 48; // truncation toward zero: w=3 gives 0
}

long euler_series_coefficient(int w) {
    if (w <= 0) return 0;
    long count = 0;
    for (int b = 0; 6 * b <= w; ++b)
        if ((w - 6 * b) % 4 == 0) ++count;
    return count;
}

} // namespace cyclo::dihedral

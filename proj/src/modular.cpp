#include "cyclo/modular.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace cyclo::modular {

using dihedral::BasedMap;
using dihedral::FactorKey;


using words::Monomial;
using words::TPolynomial;

int BlockWedge::rank() const {
    int r = 0;
    for (const auto& b : blocks) r += static_cast<int>(b.size());
    return r;
}

std::vector<IntVec> BlockWedge::concatenated() const {
    std::vector<IntVec> out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<int> BlockWedge::shape() const {
    std::vector<int> out;
    for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
    return out;
}

namespace {

// boundary of one block: - Cycle_{k+1} ( sum_j [u_1..u_j] ^ [u_{j+1}..u_k] )
std::vector<std::pair<Rational, std::vector<std::vector<IntVec>>>>
block_boundary(const std::vector<IntVec>& block) {
    std::vector<std::pair<Rational, std::vector<std::vector<IntVec>>>> out;
    const int k = static_cast<int>(block.size());
    if (k < 2) return out;
    std::vector<IntVec> u = block;
    IntVec last(block[0].size(), 0);
    for (const auto& v : block)
        for (std::size_t j = 0; j < last.size(); ++j) last[j] -= v[j];
    u.push_back(last); // k+1 entries summing to zero
    for (int i = 0; i < k + 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
            std::vector<IntVec> b1, b2;
            for (int t = 0; t < j; ++t) b1.push_back(u[static_cast<std::size_t>((i + t) % (k + 1))]);
            for (int t = j; t < k; ++t) b2.push_back(u[static_cast<std::size_t>((i + t) % (k + 1))]);
            out.push_back({Rational(-1), {std::move(b1), std::move(b2)}});
        }
    }
    return out;
}

} // namespace

FormalSum differential(const BlockWedge& g) {
    FormalSum out;
    for (std::size_t i = 0; i < g.blocks.size(); ++i) {
        int leib = (i % 2 == 0) ? 1 : -1; // block i+1 carries (-1)^{i}
        for (const auto& [c, parts] : block_boundary(g.blocks[i])) {
            BlockWedge term;
            for (std::size_t a = 0; a < i; ++a) term.blocks.push_back(g.blocks[a]);
            term.blocks.push_back(parts[0]);
            term.blocks.push_back(parts[1]);
            for (std::size_t a = i + 1; a < g.blocks.size(); ++a) term.blocks.push_back(g.blocks[a]);
            out.push_back({Rational(leib) * c, std::move(term)});
        }
    }
    return out;
}

std::vector<ShuffleRelation> shuffle_rows(int m) {
    std::vector<ShuffleRelation> out;
    auto e = lat::standard_basis(m);
    for (int k = 1; k <= m - 1; ++k) {
        ShuffleRelation plain{k, false, {}};
        ShuffleRelation colon{k, true, {}};
        for (const auto& sigma : words::shuffles(k, m - k)) {
            std::vector<IntVec> arr;
            for (int p = 0; p < m; ++p)
                arr.push_back(e[static_cast<std::size_t>(sigma.to_source[static_cast<std::size_t>(p)] - 1)]);
            plain.terms.push_back({arr, IntMat::from_columns(arr)});
            auto conv = colon_to_plain(arr);
            colon.terms.push_back({conv, IntMat::from_columns(conv)});
        }
        out.push_back(std::move(plain));
        out.push_back(std::move(colon));
    }
    return out;
}

std::vector<std::vector<long>> cosets(long N, int m) {
    std::vector<std::vector<long>> out;
    std::vector<long> t(static_cast<std::size_t>(m), 0);
    while (true) {
        long g = N;
        for (long v : t) g = std::gcd(g, v);
        if (g == 1) out.push_back(t);
        std::size_t i = 0;
        for (; i < t.size(); ++i) {
            if (++t[i] < N) break;
            t[i] = 0;
        }
        if (i == t.size()) break;
    }
    return out;
}

MCComplex::MCComplex(long N, int w, int m) : N_(N), w_(w), m_(m) {
    assert(m >= 1 && m <= 3);
    assert(w >= m);
    build_bases();
    build_relations();
    build_differentials();
}

void MCComplex::build_bases() {
    auto cs = cosets(N_, m_);
    monos_ = words::monomials_of_degree(static_cast<std::size_t>(m_), w_ - m_);
    const auto& monos = monos_;
    bases_.resize(static_cast<std::size_t>(m_));
    index_.resize(static_cast<std::size_t>(m_));
    for (int deg = 1; deg <= m_; ++deg) {
        auto shapes = words::compositions(m_, deg);
        auto& basis = bases_[static_cast<std::size_t>(deg - 1)];
        for (const auto& c : cs)
            for (const auto& mo : monos)
                for (const auto& s : shapes) basis.push_back({c, mo, s});
        auto& idx = index_[static_cast<std::size_t>(deg - 1)];
        for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    }
}

const std::vector<MCBasisElement>& MCComplex::basis(int degree) const {
    return bases_[static_cast<std::size_t>(degree - 1)];
}

std::size_t MCComplex::basis_index(int degree, const MCBasisElement& e) const {
    const auto& idx = index_[static_cast<std::size_t>(degree - 1)];
    auto it = idx.find(e);
    assert(it != idx.end());
    return it->second;
}

// The coefficient pair (coset, monomial) transports as follows. Residues
// track linearly: (alpha.g)(e_j) = alpha(g e_j). Monomials are coefficients
// of the generating function against the tracking forms L_i = sum_j g_{ji} t_j,
// so they move by the adjoint of the substitution P -> P(L_1,...,L_m):
//   (d).g = sum_{d'} [t^d] (prod_i L_i^{d'_i}) (d').
void MCComplex::transported(int degree, const std::vector<long>& coset, const Monomial& mono,
                            const IntMat& g, const std::vector<int>& shape, const Rational& c,
                            lin::SparseVector& out) const {
    std::vector<long> nc(coset.size(), 0);
    for (int j = 0; j < m_; ++j) {
        long s = 0;
        for (int i = 0; i < m_; ++i) s += coset[static_cast<std::size_t>(i)] * g.at(i, j);
        nc[static_cast<std::size_t>(j)] = words::mod_norm(s, N_);
    }

    const auto& table = substitution_rows(g);
    for (std::size_t ti = 0; ti < monos_.size(); ++ti) {
        auto it = table[ti].find(mono);
        if (it == table[ti].end()) continue;
        MCBasisElement e{nc, monos_[ti], shape};
        out.add(basis_index(degree, e), c * it->second);
    }
}

// rows of the substitution matrix: entry ti holds the expansion of
// prod_i L_i^{monos_[ti]_i} as a coefficient map
const std::vector<std::map<words::Monomial, Rational>>& MCComplex::substitution_rows(
    const IntMat& g) const {
    auto it = subst_cache_.find(g.a);
    if (it != subst_cache_.end()) return it->second;

    std::vector<TPolynomial> forms;
    forms.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
        std::vector<Rational> coeffs;
        for (int j = 0; j < m_; ++j) coeffs.emplace_back(g.at(j, i));
        forms.push_back(TPolynomial::linear(static_cast<std::size_t>(m_), coeffs));
    }
    std::vector<std::map<words::Monomial, Rational>> table;
    table.reserve(monos_.size());
    for (const auto& target : monos_) {
        TPolynomial p = TPolynomial::constant(static_cast<std::size_t>(m_), Rational(1));
        for (int i = 0; i < m_; ++i)
            for (int e = 0; e < target[static_cast<std::size_t>(i)]; ++e)
                p = p.mul(forms[static_cast<std::size_t>(i)]);
        table.push_back(p.terms());
    }
    return subst_cache_.emplace(g.a, std::move(table)).first->second;
}

void MCComplex::build_relations() {
    auto cs = cosets(N_, m_);
    auto monos = words::monomials_of_degree(static_cast<std::size_t>(m_), w_ - m_);
    relations_.resize(static_cast<std::size_t>(m_));
    echelons_.resize(static_cast<std::size_t>(m_));

    for (int deg = 1; deg <= m_; ++deg) {
        auto shapes = words::compositions(m_, deg);
        lin::SparseMatrix rel(bases_[static_cast<std::size_t>(deg - 1)].size());

        for (const auto& s : shapes) {
            int offset = 0;
            for (std::size_t b = 0; b < s.size(); ++b) {
                int kb = s[static_cast<std::size_t>(b)];
                if (kb == 1) {
                    // rank-1 block relation [v] = [-v]
                    std::vector<IntVec> cols = lat::standard_basis(m_);
                    for (long& x : cols[static_cast<std::size_t>(offset)]) x = -x;
                    IntMat g = IntMat::from_columns(cols);
                    for (const auto& c : cs)
                        for (const auto& mo : monos) {
                            lin::SparseVector row;
                            MCBasisElement src{c, mo, s};
                            row.add(basis_index(deg, src), Rational(1));
                            transported(deg, c, mo, g, s, Rational(-1), row);
                            if (!row.empty()) rel.append_row(std::move(row));
                        }
                }
                for (int k = 1; k <= kb - 1; ++k) {
                    std::vector<std::vector<std::vector<IntVec>>> variants(2);
                    for (const auto& sigma : words::shuffles(k, kb - k)) {
                        std::vector<IntVec> arr;
                        for (int p = 0; p < kb; ++p) {
                            IntVec v(static_cast<std::size_t>(m_), 0);
                            v[static_cast<std::size_t>(
                                offset + sigma.to_source[static_cast<std::size_t>(p)] - 1)] = 1;
                            arr.push_back(std::move(v));
                        }
                        variants[0].push_back(arr);
                        variants[1].push_back(colon_to_plain(arr));
                    }
                    for (const auto& variant : variants) {
                        // embed: other blocks keep their standard vectors
                        std::vector<IntMat> gs;
                        for (const auto& arr : variant) {
                            std::vector<IntVec> cols = lat::standard_basis(m_);
                            for (int p = 0; p < kb; ++p)
                                cols[static_cast<std::size_t>(offset + p)] =
                                    arr[static_cast<std::size_t>(p)];
                            gs.push_back(IntMat::from_columns(cols));
                        }
                        for (const auto& c : cs)
                            for (const auto& mo : monos) {
                                lin::SparseVector row;
                                for (const auto& g : gs) transported(deg, c, mo, g, s, Rational(1), row);
                                if (!row.empty()) rel.append_row(std::move(row));
                            }
                    }
                }
                offset += kb;
            }
            // anticommutation of adjacent blocks
            for (std::size_t b = 0; b + 1 < s.size(); ++b) {
                std::vector<int> swapped = s;
                std::swap(swapped[b], swapped[b + 1]);
                std::vector<std::pair<int, int>> spans;
                int off = 0;
                for (int kb : s) {
                    spans.push_back({off, kb});
                    off += kb;
                }
                std::vector<std::pair<int, int>> order = spans;
                std::swap(order[b], order[b + 1]);
                std::vector<IntVec> cols;
                for (const auto& [o, k] : order)
                    for (int p = 0; p < k; ++p) {
                        IntVec v(static_cast<std::size_t>(m_), 0);
                        v[static_cast<std::size_t>(o + p)] = 1;
                        cols.push_back(std::move(v));
                    }
                IntMat g = IntMat::from_columns(cols);
                for (const auto& c : cs)
                    for (const auto& mo : monos) {
                        lin::SparseVector row;
                        MCBasisElement src{c, mo, s};
                        row.add(basis_index(deg, src), Rational(1));
                        transported(deg, c, mo, g, swapped, Rational(1), row);
                        if (!row.empty()) rel.append_row(std::move(row));
                    }
            }
        }
        echelons_[static_cast<std::size_t>(deg - 1)] = lin::echelonize(rel);
        relations_[static_cast<std::size_t>(deg - 1)] = std::move(rel);
    }
}

const lin::SparseMatrix& MCComplex::relation_rows(int degree) const {
    return relations_[static_cast<std::size_t>(degree - 1)];
}

std::size_t MCComplex::quotient_dim(int degree) const {
    return bases_[static_cast<std::size_t>(degree - 1)].size() -
           echelons_[static_cast<std::size_t>(degree - 1)].rank();
}

void MCComplex::build_differentials() {
    diff_.resize(static_cast<std::size_t>(m_));
    for (int deg = 1; deg <= m_; ++deg) {
        BasedMap d;
        std::size_t dst = deg < m_ ? bases_[static_cast<std::size_t>(deg)].size() : 0;
        d.images.set_ncols(dst);
        for (const auto& e : bases_[static_cast<std::size_t>(deg - 1)]) {
            lin::SparseVector row;
            if (deg < m_) {
                BlockWedge bw;
                int off = 0;
                auto std_cols = lat::standard_basis(m_);
                for (int kb : e.shape) {
                    std::vector<IntVec> block;
                    for (int p = 0; p < kb; ++p)
                        block.push_back(std_cols[static_cast<std::size_t>(off + p)]);
                    bw.blocks.push_back(std::move(block));
                    off += kb;
                }
                for (const auto& [c, term] : cyclo::modular::differential(bw)) {
                    IntMat g = IntMat::from_columns(term.concatenated());
                    transported(deg + 1, e.coset, e.mono, g, term.shape(), c, row);
                }
            }
            d.images.append_row(std::move(row));
        }
        diff_[static_cast<std::size_t>(deg - 1)] = std::move(d);
    }
}

const BasedMap& MCComplex::differential(int degree) const {
    return diff_[static_cast<std::size_t>(degree - 1)];
}

bool MCComplex::differential_well_defined() const {
    for (int deg = 1; deg < m_; ++deg) {
        const auto& rel = relations_[static_cast<std::size_t>(deg - 1)];
        const auto& ech = echelons_[static_cast<std::size_t>(deg)];
        for (const auto& r : rel.rows()) {
            lin::SparseVector img;
            for (const auto& [col, val] : r.entries())
                img.add_scaled(val, diff_[static_cast<std::size_t>(deg - 1)].images.rows()[col]);
            if (!lin::in_span(img, ech)) return false;
        }
    }
    return true;
}

bool MCComplex::d_squared_zero() const {
    for (int deg = 1; deg + 1 < m_; ++deg) {
        const auto& d1 = diff_[static_cast<std::size_t>(deg - 1)];
        const auto& d2 = diff_[static_cast<std::size_t>(deg)];
        const auto& ech = echelons_[static_cast<std::size_t>(deg + 1)];
        for (const auto& row : d1.images.rows()) {
            lin::SparseVector img;
            for (const auto& [col, val] : row.entries())
                img.add_scaled(val, d2.images.rows()[col]);
            if (img.empty()) continue;
            if (!lin::in_span(img, ech)) return false;
        }
    }
    return true;
}

namespace {

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

MuMap mu_map(dihedral::DihedralAlgebra& alg, MCComplex& mc) {
    const long N = mc.level();
    const int w = mc.weight();
    const int m = mc.depth();
    MuMap mu;
    mu.degree.resize(static_cast<std::size_t>(m));
    mu.surjective.assign(static_cast<std::size_t>(m), false);

    std::vector<std::vector<dihedral::WedgeTuple>> wbases;
    std::vector<std::map<dihedral::WedgeTuple, std::size_t>> windex(static_cast<std::size_t>(m));
    for (int deg = 1; deg <= m; ++deg) {
        wbases.push_back(alg.wedge_basis(w, m, deg));
        for (std::size_t i = 0; i < wbases.back().size(); ++i)
            windex[static_cast<std::size_t>(deg - 1)][wbases.back()[i]] = i;
    }

    for (int deg = 1; deg <= m; ++deg) {
        BasedMap mm;
        mm.images.set_ncols(wbases[static_cast<std::size_t>(deg - 1)].size());
        for (const auto& e : mc.basis(deg)) {
            std::vector<std::vector<std::pair<FactorKey, Rational>>> factors;
            bool dead = false;
            int off = 0;
            for (int kb : e.shape) {
                dihedral::DihedralWord word;
                word.level = N;
                for (int p = 0; p < kb; ++p) {
                    word.alphas.push_back(e.coset[static_cast<std::size_t>(off + p)]);
                    word.exps.push_back(e.mono[static_cast<std::size_t>(off + p)] + 1);
                }
                const auto& sp = alg.space(word.weight(), word.depth());
                std::vector<std::pair<FactorKey, Rational>> coords;
                if (sp.dim() > 0) {
                    dihedral::GenIndexer gi(N, word.weight(), word.depth());
                    lin::SparseVector v;
                    {
                        // I*-form: the slot forms are partial sums of the
                        // block variables; pair the block monomial against
                        // the expansion
                        const int kb2 = word.depth();
                        const int bdeg = word.weight() - kb2;
                        words::CyclicWord cw;
                        cw.level = N;
                        cw.slots.push_back({word.alpha0(),
                                            words::TPolynomial(static_cast<std::size_t>(kb2))});
                        words::TPolynomial acc(static_cast<std::size_t>(kb2));
                        for (int p = 0; p < kb2; ++p) {
                            acc += words::TPolynomial::variable(static_cast<std::size_t>(kb2),
                                                                static_cast<std::size_t>(p));
                            cw.slots.push_back({word.alphas[static_cast<std::size_t>(p)], acc});
                        }
                        words::Monomial bmono;
                        for (int p = 0; p < kb2; ++p)
                            bmono.push_back(word.exps[static_cast<std::size_t>(p)] - 1);
                        for (const auto& [n, poly] : words::expand_word(cw, bdeg)) {
                            if (words::weight(n) != word.weight()) continue;
                            Rational cc2 = poly.coefficient(bmono);
                            if (is_zero(cc2)) continue;
                            v.add(gi.index(word.alphas, n), cc2);
                        }
                    }
                    auto red = sp.reduce(v);
                    for (std::size_t idx = 0; idx < red.size(); ++idx)
                        if (!is_zero(red[idx]))
                            coords.push_back({FactorKey{word.depth(), word.weight(), idx}, red[idx]});
                }
                if (coords.empty()) dead = true;
                factors.push_back(std::move(coords));
                off += kb;
            }
            lin::SparseVector row;
            if (!dead) {
                std::vector<std::pair<std::vector<FactorKey>, Rational>> expanded{{{}, Rational(1)}};
                for (const auto& f : factors) {
                    std::vector<std::pair<std::vector<FactorKey>, Rational>> next;
                    for (const auto& [keys, c] : expanded)
                        for (const auto& [k, ck] : f) {
                            auto nk = keys;
                            nk.push_back(k);
                            next.push_back({std::move(nk), c * ck});
                        }
                    expanded = std::move(next);
                }
                for (auto& [keys, c] : expanded) {
                    int sign = sort_sign(keys);
                    if (sign == 0) continue;
                    auto it = windex[static_cast<std::size_t>(deg - 1)].find(keys);
                    assert(it != windex[static_cast<std::size_t>(deg - 1)].end());
                    row.add(it->second, Rational(sign) * c);
                }
            }
            mm.images.append_row(std::move(row));
        }
        mu.degree[static_cast<std::size_t>(deg - 1)] = std::move(mm);
    }

    mu.well_defined = true;
    for (int deg = 1; deg <= m && mu.well_defined; ++deg) {
        for (const auto& r : mc.relation_rows(deg).rows()) {
            lin::SparseVector img;
            for (const auto& [col, val] : r.entries())
                img.add_scaled(val, mu.degree[static_cast<std::size_t>(deg - 1)].images.rows()[col]);
            if (!img.empty()) {
                mu.well_defined = false;
                break;
            }
        }
    }

    auto cc = alg.cochain_complex(w, m);
    mu.chain_map = true;
    for (int deg = 1; deg < m && mu.chain_map; ++deg) {
        const auto& dmc = mc.differential(deg).images;
        const auto& mu1 = mu.degree[static_cast<std::size_t>(deg - 1)].images;
        const auto& mu2 = mu.degree[static_cast<std::size_t>(deg)].images;
        const auto& ddi = cc.diff[static_cast<std::size_t>(deg - 1)].images;
        for (std::size_t i = 0; i < mu1.nrows(); ++i) {
            lin::SparseVector lhs;
            for (const auto& [col, val] : dmc.rows()[i].entries())
                lhs.add_scaled(val, mu2.rows()[col]);
            lin::SparseVector rhs;
            for (const auto& [col, val] : mu1.rows()[i].entries())
                rhs.add_scaled(val, ddi.rows()[col]);
            if (!(lhs == rhs)) {
                mu.chain_map = false;
                break;
            }
        }
    }

    for (int deg = 1; deg <= m; ++deg) {
        mu.source_dims.push_back(mc.quotient_dim(deg));
        mu.target_dims.push_back(wbases[static_cast<std::size_t>(deg - 1)].size());
        mu.surjective[static_cast<std::size_t>(deg - 1)] =
            lin::rank(mu.degree[static_cast<std::size_t>(deg - 1)].images) ==
            wbases[static_cast<std::size_t>(deg - 1)].size();
    }
    return mu;
}

namespace {

std::vector<IntVec> am_root_vectors(int m) {
    // consecutive sums of the extended cycle (e_1,...,e_m, -sum)
    std::vector<IntVec> cycle = lat::standard_basis(m);
    IntVec last(static_cast<std::size_t>(m), 0);
    for (const auto& v : cycle)
        for (std::size_t j = 0; j < last.size(); ++j) last[j] -= v[j];
    cycle.push_back(last);
    std::set<IntVec> roots;
    const int n = m + 1;
    for (int s = 0; s < n; ++s)
        for (int len = 1; len <= m; ++len) {
            IntVec v(static_cast<std::size_t>(m), 0);
            for (int t = 0; t < len; ++t)
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] += cycle[static_cast<std::size_t>((s + t) % n)][j];
            roots.insert(std::move(v));
        }
    return {roots.begin(), roots.end()};
}

std::vector<IntVec> box_vectors(int m, int bound) {
    std::vector<IntVec> out;
    IntVec v(static_cast<std::size_t>(m), -bound);
    while (true) {
        bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
        if (!zero) out.push_back(v);
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            if (++v[i] <= bound) break;
            v[i] = -bound;
        }
        if (i == v.size()) break;
    }
    return out;
}

} // namespace

D3Report dihedral_from_shuffle_check(int m, int bound, int universe) {
    D3Report rep;
    std::vector<IntVec> vecs = universe == 0 ? box_vectors(m, bound) : am_root_vectors(m);

    std::map<std::vector<IntVec>, std::size_t> symbol;
    std::vector<std::vector<IntVec>> symbols;
    {
        std::vector<IntVec> acc;
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == m) {
                if (is_basis(acc)) {
                    symbol.emplace(acc, symbols.size());
                    symbols.push_back(acc);
                }
                return;
            }
            for (const auto& v : vecs) {
                acc.push_back(v);
                self(self, depth + 1);
                acc.pop_back();
            }
        };
        rec(rec, 0);
    }
    rep.symbol_count = symbols.size();

    // membership targets
    auto e = lat::standard_basis(m);
    IntVec v0(static_cast<std::size_t>(m), 0);
    for (const auto& v : e)
        for (std::size_t j = 0; j < v0.size(); ++j) v0[j] -= v[j];
    auto idx_of = [&](const std::vector<IntVec>& t) -> std::size_t {
        auto it = symbol.find(t);
        assert(it != symbol.end());
        return it->second;
    };
    std::vector<lin::SparseVector> targets(3);
    {
        std::vector<IntVec> rot(e.begin() + 1, e.end());
        rot.push_back(v0);
        targets[0].add(idx_of(e), rat(1));
        targets[0].add(idx_of(rot), rat(-1));

        std::vector<IntVec> refl;
        for (int i = m - 1; i >= 1; --i) refl.push_back(e[static_cast<std::size_t>(i - 1)]);
        refl.push_back(v0);
        int sign = (m % 2 == 0) ? -1 : 1; // (-1)^{m+1}
        targets[1].add(idx_of(e), rat(1));
        targets[1].add(idx_of(refl), rat(-sign));

        std::vector<IntVec> neg;
        for (const auto& v : e) {
            IntVec nv(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) nv[j] = -v[j];
            neg.push_back(std::move(nv));
        }
        targets[2].add(idx_of(e), rat(1));
        targets[2].add(idx_of(neg), rat(-1));
    }

    // stream the shuffle instances into an incremental echelon, stopping as
    // soon as all three membership targets reduce to zero
    lin::IncrementalEchelon ech(symbols.size());
    bool done = false;
    auto check_targets = [&]() {
        for (const auto& t : targets)
            if (!(t.empty() || ech.contains(t))) return false;
        return true;
    };
    auto add_instance = [&](const std::vector<IntVec>& u, int k, bool colon) {
        lin::SparseVector row;
        for (const auto& sigma : words::shuffles(k, m - k)) {
            std::vector<IntVec> arr;
            for (int p = 0; p < m; ++p)
                arr.push_back(u[static_cast<std::size_t>(sigma.to_source[static_cast<std::size_t>(p)] - 1)]);
            if (colon) arr = colon_to_plain(arr);
            auto it = symbol.find(arr);
            if (it == symbol.end()) return; // leaves the bounded universe
            row.add(it->second, Rational(1));
        }
        if (!row.empty()) {
            if (ech.insert(std::move(row))) ++rep.row_count;
        }
    };
    std::size_t since_check = 0;
    for (const auto& u : symbols) {
        for (int k = 1; k <= m - 1 && !done; ++k) {
            if (2 * k <= m) add_instance(u, k, false); // s(A|B) = s(B|A)
            add_instance(u, k, true);
        }
        if (++since_check >= 512) {
            since_check = 0;
            if (check_targets()) {
                done = true;
                break;
            }
        }
        if (done) break;
    }

    rep.cyclic = targets[0].empty() || ech.contains(targets[0]);
    rep.reflection = targets[1].empty() || ech.contains(targets[1]);
    rep.negation = targets[2].empty() || ech.contains(targets[2]);
    return rep;
}

} // namespace cyclo::modular

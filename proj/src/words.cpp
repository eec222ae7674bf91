#include "cyclo/words.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclo::words {

long mod_norm(long x, long n) {
    assert(n >= 1);
    long r = x % n;
    return r < 0 ? r + n : r;
}

int weight(const Composition& n) {
    int w = 0;
    for (int p : n) w += p;
    return w;
}

namespace {

void compositions_rec(int w, int m, Composition& acc, std::vector<Composition>& out) {
    if (m == 1) {
        if (w >= 1) {
            acc.push_back(w);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (int first = 1; first <= w - (m - 1); ++first) {
        acc.push_back(first);
        compositions_rec(w - first, m - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions(int w, int m) {
    std::vector<Composition> out;
    if (m < 1 || w < m) return out;
    Composition acc;
    compositions_rec(w, m, acc, out);
    return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    Monomial acc(nvars, 0);
    // lex enumeration by recursion on the first variable
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i + 1 == nvars) {
            acc[i] = rem;
            out.push_back(acc);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            acc[i] = e;
            self(self, i + 1, rem - e);
        }
        acc[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

bool ShufflePermutation::order_preserving(int k) const {
    int last_a = 0, last_b = k;
    for (int s : to_source) {
        if (s <= k) {
            if (s <= last_a) return false;
            last_a = s;
        } else {
            if (s <= last_b) return false;
            last_b = s;
        }
    }
    return true;
}

std::vector<ShufflePermutation> shuffles(int k, int l) {
    std::vector<ShufflePermutation> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i > k && j > l) {
            out.push_back({acc});
            return;
        }
        if (i <= k) {
            acc.push_back(i);
            self(self, i + 1, j);
            acc.pop_back();
        }
        if (j <= l) {
            acc.push_back(k + j);
            self(self, i, j + 1);
            acc.pop_back();
        }
    };
    rec(rec, 1, 1);
    return out;
}

std::vector<QSTerm> quasi_shuffle_patterns(int k, int l) {
    std::vector<QSTerm> out;
    QSTerm acc;
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == k && j == l) {
            out.push_back(acc);
            return;
        }
        if (i < k) {
            acc.push_back({i, -1});
            self(self, i + 1, j);
            acc.pop_back();
        }
        if (j < l) {
            acc.push_back({-1, j});
            self(self, i, j + 1);
            acc.pop_back();
        }
        if (i < k && j < l) {
            acc.push_back({i, j});
            self(self, i + 1, j + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<IndexedWord> quasi_shuffle(const IndexedWord& u, const IndexedWord& v) {
    std::vector<IndexedWord> out;
    for (const QSTerm& pat : quasi_shuffle_patterns(static_cast<int>(u.size()),
                                                    static_cast<int>(v.size()))) {
        IndexedWord w;
        w.reserve(pat.size());
        for (const QSSlot& s : pat) {
            Letter letter{0, 0};
            if (s.from_left >= 0) {
                letter.arg += u[static_cast<std::size_t>(s.from_left)].arg;
                letter.exp += u[static_cast<std::size_t>(s.from_left)].exp;
            }
            if (s.from_right >= 0) {
                letter.arg += v[static_cast<std::size_t>(s.from_right)].arg;
                letter.exp += v[static_cast<std::size_t>(s.from_right)].exp;
            }
            w.push_back(letter);
        }
        out.push_back(std::move(w));
    }
    return out;
}

CyclicWord CyclicWord::rotated(int by) const {
    CyclicWord out;
    out.level = level;
    int n = static_cast<int>(slots.size());
    out.slots.reserve(slots.size());
    for (int i = 0; i < n; ++i)
        out.slots.push_back(slots[static_cast<std::size_t>(((i + by) % n + n) % n)]);
    return out;
}

CyclicWord CyclicWord::reflected() const {
    CyclicWord out;
    out.level = level;
    out.slots.push_back(slots[0]);
    for (std::size_t i = slots.size() - 1; i >= 1; --i) out.slots.push_back(slots[i]);
    return out;
}

std::vector<std::pair<Composition, TPolynomial>> expand_word(const CyclicWord& w, int degree_cap) {
    const int m = w.depth();
    assert(m >= 1);
    std::vector<std::pair<Composition, TPolynomial>> out;

    // diffs[i] = form_i - form_0, with precomputed powers up to the cap
    std::vector<std::vector<TPolynomial>> pows(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        TPolynomial diff = w.slots[static_cast<std::size_t>(i)].form;
        diff -= w.slots[0].form;
        auto& p = pows[static_cast<std::size_t>(i - 1)];
        p.push_back(TPolynomial::constant(diff.nvars(), Rational(1)));
        for (int e = 1; e <= degree_cap; ++e) p.push_back(p.back().mul(diff, degree_cap));
    }

    Composition n(static_cast<std::size_t>(m), 1);
    auto rec = [&](auto&& self, int i, int rem, const TPolynomial& acc) -> void {
        if (acc.is_zero()) return;
        if (i == m) {
            out.emplace_back(n, acc);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            n[static_cast<std::size_t>(i)] = e + 1;
            self(self, i + 1, rem - e,
                 acc.mul(pows[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)], degree_cap));
        }
        n[static_cast<std::size_t>(i)] = 1;
    };
    std::size_t nv = w.slots[0].form.nvars();
    rec(rec, 0, degree_cap, TPolynomial::constant(nv, Rational(1)));
    return out;
}

CyclicWord hom_to_nonhom(const CyclicWord& hom) {
    const std::size_t n = hom.slots.size();
    TPolynomial sum(hom.slots[0].form.nvars());
    for (const auto& s : hom.slots) sum += s.form;
    if (!sum.is_zero()) throw std::invalid_argument("homogeneous word: t-forms must sum to zero");
    CyclicWord out;
    out.level = hom.level;
    out.slots.reserve(n);
    TPolynomial partial(hom.slots[0].form.nvars());
    for (std::size_t i = 0; i < n; ++i) {
        long res = hom.slots[(i + 1) % n].res - hom.slots[i].res;
        partial += hom.slots[i].form;
        out.slots.push_back({mod_norm(res, hom.level), partial});
    }
    return out;
}

CyclicWord nonhom_to_hom(const CyclicWord& w) {
    const std::size_t n = w.slots.size();
    long total = 0;
    for (const auto& s : w.slots) total += s.res;
    if (mod_norm(total, w.level) != 0)
        throw std::invalid_argument("nonhomogeneous word: residues must sum to zero");
    CyclicWord out;
    out.level = w.level;
    out.slots.reserve(n);
    long partial = 0;
    for (std::size_t i = 0; i < n; ++i) {
        partial += w.slots[i].res;
        TPolynomial form = w.slots[(i + 1) % n].form;
        form -= w.slots[i].form;
        out.slots.push_back({mod_norm(partial, w.level), form});
    }
    return out;
}

} // namespace cyclo::words

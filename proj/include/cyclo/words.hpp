#pragma once

#include "cyclo/tpoly.hpp"

#include <cstdint>
#include <vector>

namespace cyclo::words {

// Exponent tuple (n_1,...,n_m), all parts >= 1; weight = sum, depth = size.
using Composition = std::vector<int>;

int weight(const Composition& n);

// All compositions of w into exactly m parts, lexicographically ordered.
// Empty when w < m or m < 1.
std::vector<Composition> compositions(int w, int m);

// Monomials of the given total degree in nvars variables, lex ordered.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

// A (k,l)-shuffle: positions 1..k+l receive the source indices 1..k and
// k+1..k+l, each block in its original order.
struct ShufflePermutation {
    std::vector<int> to_source; // to_source[p] = source index at position p (1-based values)
    bool order_preserving(int k) const;
};

std::vector<ShufflePermutation> shuffles(int k, int l);

// One slot of a quasi-shuffle term: an index into the left word, the right
// word, or both (a coincidence k_i = k_j merging the two letters).
struct QSSlot {
    int from_left = -1;
    int from_right = -1;
};
using QSTerm = std::vector<QSSlot>;

// All interleavings-with-merges of depths (k,l). Terms with no merge
// correspond exactly to shuffles(k,l).
std::vector<QSTerm> quasi_shuffle_patterns(int k, int l);

// Applied form on words whose letters are (additive residue, exponent).
// Merging adds residues and exponents.
struct Letter {
    long arg;
    int exp;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};
using IndexedWord = std::vector<Letter>;
std::vector<IndexedWord> quasi_shuffle(const IndexedWord& u, const IndexedWord& v);

// --- Extended dihedral words as symbols ---------------------------------
//
// A cyclic word is a list of slots (group residue, t-linear form); slot 0 is
// the base point used as the expansion gauge. Residues are additive mod N.
struct WordSlot {
    long res;
    TPolynomial form;
};

struct CyclicWord {
    long level = 1; // N
    std::vector<WordSlot> slots;

    int depth() const { return static_cast<int>(slots.size()) - 1; }
    CyclicWord rotated(int by = 1) const;  // slot i <- slot i+by
    CyclicWord reflected() const;          // fixes slot 0, reverses the rest
};

// Coefficient expansion of a word against its base slot: returns each
// composition n together with prod_i (form_i - form_0)^(n_i - 1), truncated
// at total degree <= degree_cap.
std::vector<std::pair<Composition, TPolynomial>> expand_word(const CyclicWord& w, int degree_cap);

// Coordinate translation between the homogeneous and nonhomogeneous
// presentations. Homogeneous words carry sum-zero t-forms and residues up to
// a common shift; nonhomogeneous words carry product-one residues and
// shift-invariant t-forms.
CyclicWord hom_to_nonhom(const CyclicWord& hom);
CyclicWord nonhom_to_hom(const CyclicWord& w);

long mod_norm(long x, long n); // representative in [0, n)

} // namespace cyclo::words

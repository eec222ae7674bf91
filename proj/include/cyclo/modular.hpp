#pragma once

#include "cyclo/dihedral.hpp"
#include "cyclo/lattice.hpp"
#include "cyclo/sparse.hpp"
#include "cyclo/words.hpp"

#include <vector>

namespace cyclo::modular {

using lat::IntMat;
using lat::IntVec;
using lat::angle_to_plain;
using lat::colon_to_plain;
using lat::is_basis;

// A wedge of blocks of lattice vectors. Blocks are kept in written order;
// anticommutation is a relation, not a normal form.
struct BlockWedge {
    std::vector<std::vector<IntVec>> blocks;
    auto operator<=>(const BlockWedge&) const = default;

    int rank() const; // total number of vectors
    std::vector<IntVec> concatenated() const;
    std::vector<int> shape() const;
};

using FormalSum = std::vector<std::pair<Rational, BlockWedge>>;

// The cyclic-sum differential extended by the Leibniz rule (thesign of the
// i-th block term is (-1)^{i-1}, matching the explicit low-rank displays).
FormalSum differential(const BlockWedge& g);

// One term of a degree-1 shuffle relation: the arrangement and the
// unimodular matrix carrying the standard basis to it.
struct ShuffleTerm {
    std::vector<IntVec> arrangement;
    IntMat g;
};

struct ShuffleRelation {
    int split = 0;     // k
    bool colon = false; // which of the two families
    std::vector<ShuffleTerm> terms;
};

// Both families, every split k = 1..m-1, instantiated on the standard basis.
std::vector<ShuffleRelation> shuffle_rows(int m);

// --- finite realization MC*(Gamma_1(N;m), S^{w-m}) -----------------------

struct MCBasisElement {
    std::vector<long> coset;  // size m, gcd(coset, N) = 1
    words::Monomial mono;     // degree w-m in t_1..t_m
    std::vector<int> shape;   // block sizes, sum m
    auto operator<=>(const MCBasisElement&) const = default;
};

std::vector<std::vector<long>> cosets(long N, int m);

class MCComplex {
public:
    MCComplex(long N, int w, int m);

    long level() const { return N_; }
    int weight() const { return w_; }
    int depth() const { return m_; }

    const std::vector<MCBasisElement>& basis(int degree) const;
    std::size_t basis_index(int degree, const MCBasisElement& e) const;

    const lin::SparseMatrix& relation_rows(int degree) const;
    std::size_t quotient_dim(int degree) const;

    // differential on the free module, degree -> degree+1 (rows are images)
    const dihedral::BasedMap& differential(int degree) const;

    // exact checks used by the verification suites
    bool differential_well_defined() const; // d(relations) subset relation span
    bool d_squared_zero() const;            // on the quotient, all degrees

private:
    long N_;
    int w_, m_;
    std::vector<words::Monomial> monos_; // degree w-m monomial basis
    std::vector<std::vector<MCBasisElement>> bases_;        // per degree 1..m
    std::vector<std::map<MCBasisElement, std::size_t>> index_;
    std::vector<lin::SparseMatrix> relations_;
    std::vector<lin::Echelon> echelons_;
    std::vector<dihedral::BasedMap> diff_;
    mutable std::map<std::vector<long>, std::vector<std::map<words::Monomial, Rational>>>
        subst_cache_;

    void build_bases();
    void build_relations();
    void build_differentials();
    const std::vector<std::map<words::Monomial, Rational>>& substitution_rows(const IntMat& g) const;

    // transport (coset, mono) along g and add c * result at the given shape
    void transported(int degree, const std::vector<long>& coset, const words::Monomial& mono,
                     const IntMat& g, const std::vector<int>& shape, const Rational& c,
                     lin::SparseVector& out) const;
};

// The map mu(N) from the finite modular complex to the dihedral cochain
// complex, one matrix per degree (rows = images of the free MC basis in
// wedge coordinates), plus the exact verification outcomes.
struct MuMap {
    std::vector<dihedral::BasedMap> degree; // 1..m
    bool well_defined = false;              // mu(relation rows) = 0
    bool chain_map = false;                 // mu . d == delta . mu, all degrees
    std::vector<bool> surjective;           // per degree
    std::vector<std::size_t> source_dims;   // MC quotient dims
    std::vector<std::size_t> target_dims;   // wedge dims
};

MuMap mu_map(dihedral::DihedralAlgebra& alg, MCComplex& mc);

// Verifies that the dihedral symmetry relations of the arrangement symbols
// lie in the span of the emitted shuffle rows, in the free module on bounded
// arrangements.
struct D3Report {
    std::size_t symbol_count = 0;
    std::size_t row_count = 0;
    bool cyclic = false;
    bool reflection = false;
    bool negation = false;
    bool all() const { return cyclic && reflection && negation; }
};

// universe: 0 = box of entries bounded by `bound`; 1 = A_m root vectors
D3Report dihedral_from_shuffle_check(int m, int bound = 1, int universe = 1);

} // namespace cyclo::modular

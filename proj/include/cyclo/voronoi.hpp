#pragma once

#include "cyclo/lattice.hpp"
#include "cyclo/modular.hpp"
#include "cyclo/rational.hpp"

#include <map>
#include <ostream>
#include <vector>

namespace cyclo::voronoi {

using lat::IntVec;

// Symmetric rational quadratic form on Z^n.
class QuadForm {
public:
    QuadForm() = default;
    QuadForm(int n, std::vector<Rational> entries); // row-major n*n, symmetric

    static QuadForm identity(int n);
    static QuadForm am_gram(int m); // Gram matrix of the A_m root system

    int dim() const { return n_; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    Rational eval(const IntVec& x) const;

    // exact pivot tests (LDL^T without permutations, restarting on zero pivots)
    bool positive_definite() const;
    bool positive_semidefinite() const;

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

// All nonzero lattice vectors attaining min q over the box |x_i| <= bound.
// Completeness is certified by exhibiting rational c > 0 with q - c*I
// positive semidefinite and min <= c*bound^2; throws std::runtime_error if
// the bound cannot be certified.
std::vector<IntVec> minimal_vectors(const QuadForm& q, long bound);

// --- formal oriented cells -----------------------------------------------

// Vertices are primitive integer vectors normalized up to sign; a cell is
// stored by its sorted vertex set, orientation folded into the coefficient.
struct VCell {
    std::vector<IntVec> verts; // normalized, strictly sorted
    auto operator<=>(const VCell&) const = default;

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    int rank() const;
    bool contains(const VCell& face) const;
};

IntVec normalize_vertex(IntVec v); // sign normalization, primitivity check

// (cell symbol, orientation sign) from an ordered vertex list; sign 0 when
// degenerate (repeated vertex after normalization)
std::pair<VCell, int> make_cell(const std::vector<IntVec>& ordered);

class CellChain {
public:
    CellChain() = default;

    void add(const std::vector<IntVec>& ordered, const Rational& c);
    void add(const VCell& cell, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<VCell, Rational>& terms() const { return terms_; }

    CellChain& operator+=(const CellChain& rhs);
    CellChain& operator-=(const CellChain& rhs);
    CellChain& operator*=(const Rational& c);
    bool operator==(const CellChain&) const = default;

private:
    std::map<VCell, Rational> terms_;
};

// alternating sum of facets of every (simplicial) cell
CellChain boundary(const CellChain& c);

// The cell of type A_m attached to a basis: vertices are the consecutive
// sums of the extended cycle (v_1,...,v_m,-sum).
VCell am_cell(const std::vector<IntVec>& basis);

// the degreewise cell assignments for ranks 2 and 3
CellChain psi2(const modular::BlockWedge& g);
CellChain psi3(const modular::BlockWedge& g);

// --- verification reports -------------------------------------------------

struct Psi2Report {
    std::size_t bases_checked = 0;
    int frozen_sign = 0;   // d . psi2 == sign * psi2 . boundary
    bool chain_map = false;
};
Psi2Report verify_psi2(long bound);

struct Psi3Report {
    std::size_t bases_checked = 0;
    bool first_shuffle_killed = false;  // psi3(s(v1|v2,v3)) == 0 exactly
    int second_shuffle_sign = 0;        // psi3(s(v1|v2:v3)) == sign * d(5-simplex)
    bool second_shuffle_boundary = false;
    bool chain_map = false;             // on degree-1 and degree-2 generators
};
Psi3Report verify_psi3(long bound);

struct CokerReport {
    std::size_t bases = 0;
    std::size_t simplices = 0;
    std::size_t generic_cells = 0;
    std::size_t special_cells = 0;
    bool every_generic_in_three_simplices = false;
    bool every_simplex_has_three_generic = false;
    bool standard_lists_match = false; // the two displayed triples
};
CokerReport coker_observations(long bound);

// classification of a 4-vertex rank-3 cell
bool is_generic_3cell(const VCell& cell);
bool is_special_3cell(const VCell& cell);

// structured-text listing: every enumerated generic 3-cell with its three
// containing 5-simplices
void emit_incidence_table(long bound, std::ostream& os);

} // namespace cyclo::voronoi

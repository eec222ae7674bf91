#pragma once

#include <compare>
#include <vector>

namespace cyclo::lat {

using IntVec = std::vector<long>;

// Dense square integer matrix; columns are the images of the standard basis.
struct IntMat {
    int n = 0;
    std::vector<long> a; // row-major

    static IntMat identity(int n);
    static IntMat from_columns(const std::vector<IntVec>& cols);

    long at(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }
    long& at(int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; }

    IntVec apply(const IntVec& v) const; // matrix * column
    IntMat mul(const IntMat& rhs) const;
    long det() const;
    IntMat inverse_unimodular() const; // requires |det| = 1

    bool operator==(const IntMat&) const = default;
};

bool is_basis(const std::vector<IntVec>& vectors); // |det| = 1

std::vector<IntVec> standard_basis(int m);

// [v_1 : ... : v_m] := [v_2-v_1, v_3-v_2, ..., v_m-v_{m-1}, -v_m]
std::vector<IntVec> colon_to_plain(const std::vector<IntVec>& v);
// <v_0,...,v_m> := [v_1,...,v_m], requires sum(v) = 0
std::vector<IntVec> angle_to_plain(const std::vector<IntVec>& v);

} // namespace cyclo::lat

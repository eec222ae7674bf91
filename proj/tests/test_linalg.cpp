#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/sparse.hpp"

#include <random>

using namespace cyclo;
using namespace cyclo::lin;

namespace {

SparseMatrix dense(std::size_t ncols, const std::vector<std::vector<long>>& rows) {
    SparseMatrix m(ncols);
    for (const auto& r : rows) {
        SparseVector v;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) v.set(c, rat(r[c]));
        m.append_row(std::move(v));
    }
    return m;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t nrows, std::size_t ncols) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<std::vector<long>> rows(nrows, std::vector<long>(ncols, 0));
    SparseMatrix m(ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        SparseVector v;
        for (std::size_t c = 0; c < ncols; ++c) {
            long n = num(rng);
            if (n != 0) v.set(c, rat(n, den(rng)));
        }
        m.append_row(std::move(v));
    }
    return m;
}

} // namespace

TEST_CASE("rank: identity and proportional rows") {
    CHECK(rank(dense(2, {{1, 0}, {0, 1}})) == 2);
    CHECK(rank(dense(2, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(SparseMatrix(5)) == 0);
}

TEST_CASE("nullspace: basic cases") {
    auto basis = nullspace_basis(dense(2, {{1, -1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].get(0) == basis[0].get(1));

    CHECK(nullspace_basis(dense(2, {{1, 0}, {0, 1}})).empty());
}

TEST_CASE("in_span: combination and empty matrix") {
    auto m = dense(3, {{1, 1, 0}, {0, 1, 1}});
    SparseVector v;
    v.set(0, rat(1));
    v.set(1, rat(2));
    v.set(2, rat(1)); // row1 + row2
    CHECK(in_span(v, m));

    SparseVector w;
    w.set(0, rat(1));
    CHECK_FALSE(in_span(w, SparseMatrix(3)));
    CHECK_FALSE(in_span(w, dense(3, {{0, 1, 0}})));
}

TEST_CASE("quotient_dim: trivial cases") {
    CHECK(quotient_dim(5, SparseMatrix(5)) == 5);
    CHECK(quotient_dim(3, dense(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 0);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        auto m = random_matrix(rng, 3 + it % 4, 2 + it % 5);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("two pivot strategies agree") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        auto m = random_matrix(rng, 4 + it % 3, 3 + it % 4);
        CHECK(rank(m, PivotRule::SmallestEntry) == rank(m, PivotRule::FirstRow));
    }
}

TEST_CASE("nullspace vectors annihilate every row exactly") {
    std::mt19937 rng(13);
    for (int it = 0; it < 25; ++it) {
        auto m = random_matrix(rng, 4, 6);
        auto basis = nullspace_basis(m);
        CHECK(basis.size() == m.ncols() - rank(m));
        for (const auto& x : basis)
            for (const auto& row : m.rows()) CHECK(is_zero(dot(row, x)));
    }
}

TEST_CASE("quotient_dim invariant under row permutation and scaling") {
    std::mt19937 rng(17);
    for (int it = 0; it < 20; ++it) {
        auto m = random_matrix(rng, 5, 5);
        SparseMatrix scrambled(5);
        std::vector<std::size_t> order{4, 2, 0, 3, 1};
        std::uniform_int_distribution<long> scale(1, 5);
        for (std::size_t i : order) {
            SparseVector row = m.rows()[i];
            row *= rat(scale(rng), scale(rng));
            scrambled.append_row(std::move(row));
        }
        CHECK(quotient_dim(5, m) == quotient_dim(5, scrambled));
    }
}

TEST_CASE("echelon reduce is a projection modulo the row space") {
    std::mt19937 rng(19);
    auto m = random_matrix(rng, 4, 6);
    auto ech = echelonize(m);
    for (const auto& row : m.rows()) CHECK(ech.reduce(row).empty());
    // reduce is idempotent
    SparseVector v;
    v.set(0, rat(3, 2));
    v.set(5, rat(-1, 7));
    auto r1 = ech.reduce(v);
    CHECK(ech.reduce(r1) == r1);
}

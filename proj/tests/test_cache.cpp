#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/cache.hpp"
#include "cyclo/dihedral.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace cyclo;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("cyclo-cache-test-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("cache round trip preserves dimensions and the relation matrix") {
    TempDir tmp;
    dihedral::DihedralAlgebra alg(2);
    auto rel = alg.relation_matrix(4, 2);
    std::size_t rank = lin::rank(rel);
    cache::DimRecord rec{2, 4, 2, rel.ncols(), rank, rel.ncols() - rank};
    cache::store(tmp.path.string(), rec, rel);

    auto dims = cache::load_dims(tmp.path.string(), 2, 4, 2);
    REQUIRE(dims.has_value());
    CHECK(dims->ngens == rec.ngens);
    CHECK(dims->rank == rec.rank);
    CHECK(dims->dim == rec.dim);

    auto mat = cache::load_matrix(tmp.path.string(), 2, 4, 2);
    REQUIRE(mat.has_value());
    CHECK(mat->nrows() == rel.nrows());
    CHECK(mat->ncols() == rel.ncols());
    CHECK(lin::rank(*mat) == rank);
    for (std::size_t i = 0; i < rel.nrows(); ++i) CHECK(mat->rows()[i] == rel.rows()[i]);

    // a missing key reads as absent
    CHECK_FALSE(cache::load_dims(tmp.path.string(), 2, 5, 2).has_value());
}

TEST_CASE("cache corruption is detected by the checksum") {
    TempDir tmp;
    dihedral::DihedralAlgebra alg(1);
    auto rel = alg.relation_matrix(6, 2);
    std::size_t rank = lin::rank(rel);
    cache::store(tmp.path.string(), {1, 6, 2, rel.ncols(), rank, rel.ncols() - rank}, rel);

    auto path = cache::entry_path(tmp.path.string(), 1, 6, 2);
    REQUIRE(cache::load_dims(tmp.path.string(), 1, 6, 2).has_value());

    // flip one digit in the dims line
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = content.find("dims 1 6 2");
    REQUIRE(pos != std::string::npos);
    content[pos + 5] = '9';
    std::ofstream out(path, std::ios::trunc);
    out << content;
    out.close();

    CHECK_FALSE(cache::load_dims(tmp.path.string(), 1, 6, 2).has_value());
}

TEST_CASE("resolve_dir prefers the explicit argument") {
    CHECK(cache::resolve_dir("/x/y") == "/x/y");
}

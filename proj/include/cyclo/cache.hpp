#pragma once

#include "cyclo/sparse.hpp"

#include <optional>
#include <string>

namespace cyclo::cache {

inline constexpr int kSchemaVersion = 1;

struct DimRecord {
    long N = 1;
    int w = 0, m = 0;
    std::size_t ngens = 0;
    std::size_t rank = 0;
    std::size_t dim = 0;
};

// cache directory: explicit argument, else $CYCLO_CACHE_DIR, else empty
// (caching disabled)
std::string resolve_dir(const std::string& override_dir);

// Portable structured text with explicit numerator/denominator integers and a
// trailing checksum line; a corrupt or mismatched file reads as absent.
void store(const std::string& dir, const DimRecord& rec, const lin::SparseMatrix& relations);
std::optional<DimRecord> load_dims(const std::string& dir, long N, int w, int m);
std::optional<lin::SparseMatrix> load_matrix(const std::string& dir, long N, int w, int m);

std::string entry_path(const std::string& dir, long N, int w, int m);

} // namespace cyclo::cache

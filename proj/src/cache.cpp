#include "cyclo/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cyclo::cache {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::string resolve_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("CYCLO_CACHE_DIR")) return env;
    return {};
}

std::string entry_path(const std::string& dir, long N, int w, int m) {
    std::ostringstream os;
    os << dir << "/dihedral_N" << N << "_w" << w << "_m" << m << ".txt";
    return os.str();
}

void store(const std::string& dir, const DimRecord& rec, const lin::SparseMatrix& relations) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ostringstream body;
    body << "cyclo-cache " << kSchemaVersion << "\n";
    body << "dims " << rec.N << " " << rec.w << " " << rec.m << " " << rec.ngens << " "
         << rec.rank << " " << rec.dim << "\n";
    body << "matrix " << relations.nrows() << " " << relations.ncols() << "\n";
    for (const auto& row : relations.rows()) {
        body << "row";
        for (const auto& [col, val] : row.entries())
            body << " " << col << ":" << val.get_num().get_str() << "/"
                 << val.get_den().get_str();
        body << "\n";
    }
    std::ofstream out(entry_path(dir, rec.N, rec.w, rec.m), std::ios::trunc);
    out << body.str();
    out << "checksum " << std::hex << fnv1a(body.str()) << "\n";
}

namespace {

// reads the whole entry, verifying schema and checksum; empty on any defect
std::optional<std::string> read_verified(const std::string& dir, long N, int w, int m) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(entry_path(dir, N, w, m));
    if (!in) return std::nullopt;
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = content.rfind("checksum ");
    if (pos == std::string::npos) return std::nullopt;
    std::string body = content.substr(0, pos);
    std::istringstream tail(content.substr(pos + 9));
    std::uint64_t sum = 0;
    tail >> std::hex >> sum;
    if (sum != fnv1a(body)) return std::nullopt;
    if (body.rfind("cyclo-cache 1\n", 0) != 0) return std::nullopt;
    return body;
}

} // namespace

std::optional<DimRecord> load_dims(const std::string& dir, long N, int w, int m) {
    auto body = read_verified(dir, N, w, m);
    if (!body) return std::nullopt;
    std::istringstream in(*body);
    std::string line;
    std::getline(in, line); // header
    std::getline(in, line);
    std::istringstream ls(line);
    std::string tag;
    DimRecord rec;
    ls >> tag >> rec.N >> rec.w >> rec.m >> rec.ngens >> rec.rank >> rec.dim;
    if (tag != "dims" || rec.N != N || rec.w != w || rec.m != m) return std::nullopt;
    return rec;
}

std::optional<lin::SparseMatrix> load_matrix(const std::string& dir, long N, int w, int m) {
    auto body = read_verified(dir, N, w, m);
    if (!body) return std::nullopt;
    std::istringstream in(*body);
    std::string line;
    std::getline(in, line); // header
    std::getline(in, line); // dims
    std::getline(in, line); // matrix nrows ncols
    std::istringstream ms(line);
    std::string tag;
    std::size_t nrows = 0, ncols = 0;
    ms >> tag >> nrows >> ncols;
    if (tag != "matrix") return std::nullopt;
    lin::SparseMatrix out(ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!std::getline(in, line)) return std::nullopt;
        std::istringstream rs(line);
        rs >> tag;
        if (tag != "row") return std::nullopt;
        lin::SparseVector row;
        std::string ent;
        while (rs >> ent) {
            auto colon = ent.find(':');
            if (colon == std::string::npos) return std::nullopt;
            std::size_t col = std::stoul(ent.substr(0, colon));
            row.set(col, parse_rational(ent.substr(colon + 1)));
        }
        out.append_row(std::move(row));
    }
    return out;
}

} // namespace cyclo::cache

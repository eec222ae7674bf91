#include "cyclo/lattice.hpp"

#include <cassert>

namespace cyclo::lat {

IntMat IntMat::identity(int n) {
    IntMat m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols) {
    IntMat m;
    m.n = static_cast<int>(cols.size());
    m.a.assign(static_cast<std::size_t>(m.n * m.n), 0);
    for (int c = 0; c < m.n; ++c) {
        assert(static_cast<int>(cols[static_cast<std::size_t>(c)].size()) == m.n);
        for (int r = 0; r < m.n; ++r)
            m.at(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
    return m;
}

IntVec IntMat::apply(const IntVec& v) const {
    IntVec out(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out[static_cast<std::size_t>(r)] += at(r, c) * v[static_cast<std::size_t>(c)];
    return out;
}

IntMat IntMat::mul(const IntMat& rhs) const {
    assert(n == rhs.n);
    IntMat out;
    out.n = n;
    out.a.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    return out;
}

long IntMat::det() const {
    if (n == 1) return a[0];
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    long d = 0;
    for (int c = 0; c < n; ++c) {
        if (at(0, c) == 0) continue;
        IntMat minor;
        minor.n = n - 1;
        minor.a.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
        for (int r = 1; r < n; ++r)
            for (int cc = 0; cc < n; ++cc)
                if (cc != c) minor.a.push_back(at(r, cc));
        d += (c % 2 == 0 ? 1 : -1) * at(0, c) * minor.det();
    }
    return d;
}

IntMat IntMat::inverse_unimodular() const {
    long d = det();
    assert(d == 1 || d == -1);
    IntMat inv;
    inv.n = n;
    inv.a.assign(static_cast<std::size_t>(n * n), 0);
    if (n == 1) {
        inv.at(0, 0) = d;
        return inv;
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            IntMat minor;
            minor.n = n - 1;
            for (int i = 0; i < n; ++i) {
                if (i == c) continue;
                for (int j = 0; j < n; ++j)
                    if (j != r) minor.a.push_back(at(i, j));
            }
            inv.at(r, c) = (((r + c) % 2 == 0) ? 1 : -1) * minor.det() * d;
        }
    return inv;
}

bool is_basis(const std::vector<IntVec>& vectors) {
    long d = IntMat::from_columns(vectors).det();
    return d == 1 || d == -1;
}

std::vector<IntVec> standard_basis(int m) {
    std::vector<IntVec> e;
    for (int i = 0; i < m; ++i) {
        IntVec v(static_cast<std::size_t>(m), 0);
        v[static_cast<std::size_t>(i)] = 1;
        e.push_back(std::move(v));
    }
    return e;
}

std::vector<IntVec> colon_to_plain(const std::vector<IntVec>& v) {
    const std::size_t m = v.size();
    std::vector<IntVec> out;
    out.reserve(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        IntVec d(v[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = v[i + 1][j] - v[i][j];
        out.push_back(std::move(d));
    }
    IntVec last(v[m - 1].size());
    for (std::size_t j = 0; j < last.size(); ++j) last[j] = -v[m - 1][j];
    out.push_back(std::move(last));
    return out;
}

std::vector<IntVec> angle_to_plain(const std::vector<IntVec>& v) {
    IntVec sum(v[0].size(), 0);
    for (const auto& x : v)
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += x[j];
    for (long s : sum) assert(s == 0);
    (void)sum;
    return std::vector<IntVec>(v.begin() + 1, v.end());
}

} // namespace cyclo::lat

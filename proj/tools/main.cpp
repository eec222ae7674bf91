#include <CLI11.hpp>

#include "cyclo/cache.hpp"
#include "cyclo/dihedral.hpp"
#include "cyclo/modular.hpp"
#include "cyclo/polylog.hpp"
#include "cyclo/report.hpp"
#include "cyclo/voronoi.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace cyclo;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- eval word grammar ----------------------------------------------------
//
//   Li(n1,...,nm; x1,...,xm)   arguments: rationals or w{k/N} roots of unity
//   zeta(s1,...,sm)            multiple zeta value, descending convention

struct ParsedWord {
    polylog::PolylogWord word;
    std::string display;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '{' || c == '(') ++depth;
        if (c == '}' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, e - b + 1);
}

hp::Complex parse_argument(const std::string& tok, mpfr_prec_t prec) {
    std::string t = strip(tok);
    if (t.rfind("w{", 0) == 0) {
        auto end = t.find('}');
        if (end == std::string::npos) throw std::invalid_argument("bad root literal: " + t);
        std::string body = t.substr(2, end - 2);
        auto slash = body.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("bad root literal: " + t);
        long k = std::stol(body.substr(0, slash));
        long n = std::stol(body.substr(slash + 1));
        if (n <= 0) throw std::invalid_argument("bad root literal: " + t);
        return hp::Complex::root_of_unity(k, n, prec);
    }
    return hp::Complex::of(parse_rational(t), prec);
}

ParsedWord parse_word(const std::string& text, mpfr_prec_t prec) {
    std::string s = strip(text);
    ParsedWord out;
    if (s.rfind("zeta(", 0) == 0 && s.back() == ')') {
        auto inner = s.substr(5, s.size() - 6);
        std::vector<int> exps;
        for (const auto& tok : split_list(inner)) exps.push_back(std::stoi(strip(tok)));
        if (exps.empty()) throw std::invalid_argument("empty zeta word");
        // descending convention: reverse into the ascending series order
        for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
            out.word.exps.push_back(*it);
            out.word.args.push_back(hp::Complex::of(1, prec));
        }
        out.display = s;
        return out;
    }
    if (s.rfind("Li(", 0) == 0 && s.back() == ')') {
        auto inner = s.substr(3, s.size() - 4);
        auto semi = inner.find(';');
        if (semi == std::string::npos) throw std::invalid_argument("Li word needs ';'");
        for (const auto& tok : split_list(inner.substr(0, semi)))
            out.word.exps.push_back(std::stoi(strip(tok)));
        for (const auto& tok : split_list(inner.substr(semi + 1)))
            out.word.args.push_back(parse_argument(tok, prec));
        if (out.word.exps.size() != out.word.args.size() || out.word.exps.empty())
            throw std::invalid_argument("Li word shape mismatch");
        out.display = s;
        return out;
    }
    throw std::invalid_argument("unrecognized word: " + text);
}

// ---- verification suites ---------------------------------------------------

void suite_dimensions(report::Report& rep) {
    auto t0 = std::chrono::steady_clock::now();
    dihedral::DihedralAlgebra alg(1);
    for (int w = 1; w <= 17; ++w)
        rep.add_check(1, w, 1, "dimension matches the closed form",
                      alg.dimension(w, 1) ==
                          static_cast<std::size_t>(dihedral::depth1_dimension_formula(w)),
                      std::to_string(alg.dimension(w, 1)));
    for (int w = 2; w <= 20; ++w)
        rep.add_check(1, w, 2, "dimension matches the closed form",
                      alg.dimension(w, 2) ==
                          static_cast<std::size_t>(dihedral::depth2_dimension_formula(w)),
                      std::to_string(alg.dimension(w, 2)));
    for (int w = 3; w <= 15; ++w)
        rep.add_check(1, w, 3, "dimension matches the closed form",
                      alg.dimension(w, 3) ==
                          static_cast<std::size_t>(dihedral::depth3_dimension_formula(w)),
                      std::to_string(alg.dimension(w, 3)), seconds_since(t0));
}

void suite_parity(report::Report& rep) {
    dihedral::DihedralAlgebra alg(1);
    for (int m = 1; m <= 3; ++m) {
        int wmax = m == 1 ? 17 : (m == 2 ? 20 : 15);
        for (int w = m; w <= wmax; ++w)
            if ((w + m) % 2 == 1)
                rep.add_check(1, w, m, "parity vanishing", alg.dimension(w, m) == 0);
    }
}

void suite_euler(report::Report& rep) {
    dihedral::DihedralAlgebra alg(1);
    for (int w = 2; w <= 16; w += 2) {
        auto cc = alg.cochain_complex(w, 2);
        long chi = cc.euler_characteristic();
        long expect = -dihedral::euler_series_coefficient(w);
        rep.add_check(1, w, 2, "Euler characteristic matches the generating series",
                      chi == expect, std::to_string(chi));
    }
}

void suite_coalgebra(report::Report& rep, long nmax, int wmax) {
    for (long N = 1; N <= nmax; ++N) {
        dihedral::DihedralAlgebra alg(N);
        for (int m = 2; m <= 3; ++m)
            for (int w = m; w <= wmax; ++w) {
                auto t0 = std::chrono::steady_clock::now();
                bool anti = alg.coantisymmetry_holds(w, m);
                rep.add_check(N, w, m, "co-antisymmetry (cobracket kills relations)", anti, "",
                              seconds_since(t0));
                auto cc = alg.cochain_complex(w, m);
                bool jac = true;
                for (int r = 0; r + 1 < m; ++r)
                    jac = jac && dihedral::is_zero_map(dihedral::compose(
                                     cc.diff[static_cast<std::size_t>(r)],
                                     cc.diff[static_cast<std::size_t>(r + 1)]));
                rep.add_check(N, w, m, "co-Jacobi (d composed with d vanishes)", jac);
            }
    }
}

void suite_modular(report::Report& rep, int membership_max) {
    for (long N : {1L, 2L, 3L, 5L})
        for (int m = 2; m <= 3; ++m)
            for (int w = m; w <= 8; ++w) {
                auto t0 = std::chrono::steady_clock::now();
                modular::MCComplex mc(N, w, m);
                rep.add_check(N, w, m, "differential well defined on the quotient",
                              mc.differential_well_defined());
                rep.add_check(N, w, m, "d squared is zero", mc.d_squared_zero(), "",
                              seconds_since(t0));
            }
    for (int m = 2; m <= membership_max; ++m) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = modular::dihedral_from_shuffle_check(m);
        rep.add_check(1, m, m, "shuffle span contains the cyclic relation", r.cyclic, "",
                      seconds_since(t0));
        rep.add_check(1, m, m, "shuffle span contains the reflection relation", r.reflection);
        rep.add_check(1, m, m, "shuffle span contains the negation relation", r.negation);
    }
}

void suite_mu(report::Report& rep) {
    struct Case {
        long N;
        int w, m;
        bool bijective;
    };
    std::vector<Case> cases;
    for (int w = 2; w <= 8; ++w) cases.push_back({1, w, 2, true});
    for (int w = 3; w <= 6; ++w) cases.push_back({1, w, 3, true});
    for (auto [N, w, m] : {std::tuple<long, int, int>{2, 2, 2}, {3, 2, 2}, {5, 2, 2}, {2, 3, 3}})
        cases.push_back({N, w, m, false});
    for (const auto& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        dihedral::DihedralAlgebra alg(c.N);
        modular::MCComplex mc(c.N, c.w, c.m);
        auto mu = modular::mu_map(alg, mc);
        rep.add_check(c.N, c.w, c.m, "lattice map kills the relations", mu.well_defined);
        rep.add_check(c.N, c.w, c.m, "lattice map is a chain map", mu.chain_map);
        bool surj = true;
        for (int deg = 1; deg <= c.m; ++deg)
            surj = surj && mu.surjective[static_cast<std::size_t>(deg - 1)];
        rep.add_check(c.N, c.w, c.m, "lattice map surjective in each degree", surj);
        if (c.bijective) {
            bool bij = true;
            for (int deg = 1; deg <= c.m; ++deg)
                bij = bij && mu.source_dims[static_cast<std::size_t>(deg - 1)] ==
                                 mu.target_dims[static_cast<std::size_t>(deg - 1)];
            rep.add_check(c.N, c.w, c.m, "dimension equality in every degree", bij, "",
                          seconds_since(t0));
        } else {
            rep.add_check(c.N, c.w, c.m, "degree-1 dimension equality",
                          mu.source_dims[0] == mu.target_dims[0], "", seconds_since(t0));
        }
    }
}

void suite_voronoi(report::Report& rep, long bound) {
    auto t0 = std::chrono::steady_clock::now();
    auto p2 = voronoi::verify_psi2(bound);
    rep.add_check(1, 0, 2, "rank-2 cell map is a chain map", p2.chain_map,
                  "sign " + std::to_string(p2.frozen_sign), seconds_since(t0));
    t0 = std::chrono::steady_clock::now();
    auto p3 = voronoi::verify_psi3(bound);
    rep.add_check(1, 0, 3, "first shuffle killed exactly", p3.first_shuffle_killed);
    rep.add_check(1, 0, 3, "second shuffle equals the 5-simplex boundary",
                  p3.second_shuffle_boundary, "sign " + std::to_string(p3.second_shuffle_sign));
    rep.add_check(1, 0, 3, "rank-3 cell map is a chain map", p3.chain_map, "",
                  seconds_since(t0));
    t0 = std::chrono::steady_clock::now();
    auto ck = voronoi::coker_observations(bound);
    rep.add_check(1, 0, 3, "every generic 3-cell lies in exactly three 5-simplices",
                  ck.every_generic_in_three_simplices, std::to_string(ck.generic_cells) + " cells");
    rep.add_check(1, 0, 3, "every 5-simplex contains exactly three generic 3-cells",
                  ck.every_simplex_has_three_generic, std::to_string(ck.simplices) + " simplices",
                  seconds_since(t0));
    rep.add_check(1, 0, 3, "standard incidence lists match", ck.standard_lists_match);
}

void suite_numeric(report::Report& rep, mpfr_prec_t prec) {
    using namespace polylog;
    {
        auto t0 = std::chrono::steady_clock::now();
        EvalOptions opt;
        opt.prec = 96;
        opt.eps_tail = parse_rational("3/10000000"); // 3e-7
        PolylogWord w;
        w.exps = {1, 2};
        w.args = {hp::Complex::of(1, 96), hp::Complex::of(1, 96)};
        auto res = eval(w, opt);
        hp::Real diff = hp::abs(res.value.re - hp::Real::zeta(3, 96));
        rep.add_check(1, 3, 2, "Euler identity within 1e-6", diff.to_double() < 1e-6,
                      diff.str(6), seconds_since(t0));
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        EvalOptions opt;
        opt.prec = prec;
        opt.eps_tail = parse_rational("1/100000000000000000000000000000000"); // 1e-32
        auto W = [&](std::vector<int> e, std::vector<Rational> x) {
            PolylogWord w;
            w.exps = std::move(e);
            for (const auto& q : x) w.args.push_back(hp::Complex::of(q, prec));
            return w;
        };
        std::vector<PolylogWord> ws = {W({1}, {rat(9, 10)}), W({2}, {rat(-9, 10)}),
                                       W({1, 2}, {rat(1, 2), rat(9, 10)}),
                                       W({2, 1}, {rat(-1, 3), rat(3, 4)})};
        bool ok = true;
        double worst = 0;
        for (const auto& u : ws)
            for (const auto& v : ws) {
                double r = stuffle_residual(u, v, opt).to_double();
                worst = std::max(worst, r);
                ok = ok && r < 1e-20;
            }
        std::ostringstream os;
        os << worst;
        rep.add_check(1, 0, 2, "stuffle residuals below 1e-20", ok, os.str(), seconds_since(t0));

        t0 = std::chrono::steady_clock::now();
        bool dok = true;
        worst = 0;
        for (long l : {2L, 3L}) {
            double r1 = distribution_residual(W({2}, {rat(4, 5)}), l, opt).to_double();
            double r2 =
                distribution_residual(W({1, 2}, {rat(2, 5), rat(-3, 5)}), l, opt).to_double();
            worst = std::max({worst, r1, r2});
            dok = dok && r1 < 1e-20 && r2 < 1e-20;
        }
        std::ostringstream ds;
        ds << worst;
        rep.add_check(1, 0, 2, "distribution residuals below 1e-20", dok, ds.str(),
                      seconds_since(t0));
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Rational> grid;
        for (int e = 3; e <= 7; ++e) {
            Rational g(1);
            for (int i = 0; i < e; ++i) g /= 10;
            grid.push_back(g);
        }
        bool ok = true;
        for (int m = 1; m <= 3; ++m) {
            PolylogWord w;
            for (int i = 0; i < m; ++i) {
                w.exps.push_back(1);
                w.args.push_back(hp::Complex::of(1, 192));
            }
            auto p = regularize(w, grid);
            Rational lead(1);
            for (int i = 1; i <= m; ++i) lead /= i;
            if (m % 2 == 1) lead = -lead;
            hp::Real err = hp::abs(p.coeffs.back().re - hp::Real::of(lead, 192));
            ok = ok && err.to_double() < 1e-4;
        }
        rep.add_check(1, 0, 3, "regularized all-ones leading coefficients within 1e-4", ok, "",
                      seconds_since(t0));
    }
}

// ---- commands ---------------------------------------------------------------

struct DimRow {
    int w;
    std::size_t ngens, rank, dim;
};

int cmd_dim(long N, int m, int wmin, int wmax, const std::string& cache_dir, int jobs,
            const std::string& csv_path) {
    std::vector<int> ws;
    for (int w = std::max(wmin, m); w <= wmax; ++w) ws.push_back(w);
    std::vector<DimRow> rows(ws.size());
    std::string dir = cache::resolve_dir(cache_dir);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= ws.size()) break;
            int w = ws[i];
            if (auto hit = cache::load_dims(dir, N, w, m)) {
                rows[i] = {w, hit->ngens, hit->rank, hit->dim};
                continue;
            }
            dihedral::DihedralAlgebra alg(N);
            auto rel = alg.relation_matrix(w, m);
            std::size_t rank = lin::rank(rel);
            cache::DimRecord rec{N, w, m, rel.ncols(), rank, rel.ncols() - rank};
            cache::store(dir, rec, rel);
            rows[i] = {w, rec.ngens, rec.rank, rec.dim};
        }
    };
    int nthreads = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream os;
    os << "N,w,m,generators,rank,dim\n";
    for (const auto& r : rows)
        os << N << "," << r.w << "," << m << "," << r.ngens << "," << r.rank << "," << r.dim
           << "\n";
    if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::trunc);
        f << os.str();
    }
    std::cout << os.str();
    return 0;
}

int cmd_cobracket(long N, int w, int m) {
    dihedral::DihedralAlgebra alg(N);
    const auto& sp = alg.space(w, m);
    dihedral::GenIndexer gi(N, w, m);
    std::cout << "# dim " << sp.dim() << "\n";
    for (std::size_t i = 0; i < sp.dim(); ++i) {
        auto word = gi.word(sp.basis_cols[i]);
        std::cout << "{";
        for (std::size_t a = 0; a < word.alphas.size(); ++a)
            std::cout << word.alphas[a] << (a + 1 < word.alphas.size() ? "," : "");
        std::cout << "}_{";
        for (std::size_t a = 0; a < word.exps.size(); ++a)
            std::cout << word.exps[a] << (a + 1 < word.exps.size() ? "," : "");
        std::cout << "} -> ";
        auto terms = alg.cobracket_wedge(dihedral::FactorKey{m, w, i});
        if (terms.empty()) std::cout << "0";
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const auto& [pair, c] = terms[t];
            if (t) std::cout << " + ";
            std::cout << c.get_str() << "*[m" << pair.first.m << ",w" << pair.first.w << ",#"
                      << pair.first.idx << "]^[m" << pair.second.m << ",w" << pair.second.w
                      << ",#" << pair.second.idx << "]";
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& word_text, const std::string& tol, long prec) {
    ParsedWord pw = parse_word(word_text, prec);
    polylog::EvalOptions opt;
    opt.prec = prec;
    opt.eps_tail = parse_rational(tol);
    auto res = polylog::eval(pw.word, opt);
    std::cout << pw.display << " = " << hp::to_string(res.value, 30) << "\n";
    std::cout << "tail estimate " << res.tail_bound.str(4)
              << (res.certified ? " (certified geometric bound)" : " (stabilization heuristic)")
              << ", terms " << res.terms << "\n";
    return 0;
}

int cmd_tables(const std::string& outdir) {
    std::filesystem::create_directories(outdir);
    dihedral::DihedralAlgebra alg(1);
    struct Spec {
        int m, wmax;
        long (*formula)(int);
    };
    for (auto [m, wmax, formula] : {Spec{1, 17, dihedral::depth1_dimension_formula},
                                    Spec{2, 20, dihedral::depth2_dimension_formula},
                                    Spec{3, 15, dihedral::depth3_dimension_formula}}) {
        std::ofstream f(outdir + "/dim_m" + std::to_string(m) + ".csv", std::ios::trunc);
        f << "w,m,dim,closed_form,parity_zero\n";
        for (int w = m; w <= wmax; ++w) {
            std::size_t d = alg.dimension(w, m);
            f << w << "," << m << "," << d << "," << formula(w) << ","
              << (((w + m) % 2 == 1) ? 1 : 0) << "\n";
        }
    }
    std::cout << "tables written to " << outdir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dihedral coalgebra, lattice complexes, and polylogarithm toolkit"};
    app.require_subcommand(1);

    auto* dim = app.add_subcommand("dim", "dimension table of a bigraded piece");
    long dim_N = 1;
    int dim_m = 2, dim_jobs = 0;
    std::string dim_w, dim_cache, dim_csv;
    dim->add_option("--N", dim_N, "level (roots of unity)");
    dim->add_option("--m", dim_m, "depth");
    dim->add_option("--w", dim_w, "weight or range a..b")->required();
    dim->add_option("--cache-dir", dim_cache, "cache directory (or $CYCLO_CACHE_DIR)");
    dim->add_option("--jobs", dim_jobs, "worker threads (default: hardware)");
    dim->add_option("--csv", dim_csv, "also write the table to this file");

    auto* cob = app.add_subcommand("cobracket", "cobracket of the quotient basis");
    long cob_N = 1;
    int cob_w = 5, cob_m = 2;
    cob->add_option("--N", cob_N, "level");
    cob->add_option("--w", cob_w, "weight")->required();
    cob->add_option("--m", cob_m, "depth")->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    long ver_nmax = 3, ver_bound = 2;
    int ver_wmax = 6, ver_membership = 4;
    long ver_prec = 128;
    std::string ver_csv;
    ver->add_option("--suite", suite,
                    "dimensions|parity|euler|coalgebra|modular|mu|voronoi|numeric|all");
    ver->add_option("--N-max", ver_nmax, "level bound for the coalgebra suite");
    ver->add_option("--w-max", ver_wmax, "weight bound for the coalgebra suite");
    ver->add_option("--bound", ver_bound, "entry bound for the cell enumeration");
    ver->add_option("--membership-max", ver_membership,
                    "largest rank for the shuffle membership tests");
    ver->add_option("--prec", ver_prec, "working precision in bits");
    ver->add_option("--csv", ver_csv, "write the report as CSV");
    std::string ver_incidence;
    ver->add_option("--incidence-out", ver_incidence,
                    "write the cell incidence table (voronoi suite)");

    auto* ev = app.add_subcommand("eval", "evaluate a polylogarithm word");
    std::string ev_word, ev_tol = "1/1000000000";
    long ev_prec = 128;
    ev->add_option("--word", ev_word, "Li(n1,..;x1,..) or zeta(s1,..)")->required();
    ev->add_option("--tol", ev_tol, "target tail size (rational literal)");
    ev->add_option("--prec", ev_prec, "working precision in bits (>= 64)");

    auto* tab = app.add_subcommand("tables", "emit the dimension tables as CSV");
    std::string tab_out = "tables";
    tab->add_option("--out", tab_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dim->parsed()) {
            int wmin, wmax;
            auto dots = dim_w.find("..");
            if (dots == std::string::npos) {
                wmin = wmax = std::stoi(dim_w);
            } else {
                wmin = std::stoi(dim_w.substr(0, dots));
                wmax = std::stoi(dim_w.substr(dots + 2));
            }
            return cmd_dim(dim_N, dim_m, wmin, wmax, dim_cache, dim_jobs, dim_csv);
        }
        if (cob->parsed()) return cmd_cobracket(cob_N, cob_w, cob_m);
        if (ev->parsed()) {
            if (ev_prec < 64) throw std::invalid_argument("precision must be at least 64 bits");
            return cmd_eval(ev_word, ev_tol, ev_prec);
        }
        if (tab->parsed()) return cmd_tables(tab_out);
        if (ver->parsed()) {
            report::Report rep;
            bool all = suite == "all";
            if (all || suite == "dimensions") suite_dimensions(rep);
            if (all || suite == "parity") suite_parity(rep);
            if (all || suite == "euler") suite_euler(rep);
            if (all || suite == "coalgebra") suite_coalgebra(rep, ver_nmax, ver_wmax);
            if (all || suite == "modular") suite_modular(rep, ver_membership);
            if (all || suite == "mu") suite_mu(rep);
            if (all || suite == "voronoi") {
                suite_voronoi(rep, ver_bound);
                if (!ver_incidence.empty()) {
                    std::ofstream f(ver_incidence, std::ios::trunc);
                    voronoi::emit_incidence_table(ver_bound, f);
                }
            }
            if (all || suite == "numeric") suite_numeric(rep, ver_prec);
            if (rep.records.empty()) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            report::write_text(rep, std::cout);
            if (!ver_csv.empty()) {
                std::ofstream f(ver_csv, std::ios::trunc);
                report::write_csv(rep, f);
            }
            return rep.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

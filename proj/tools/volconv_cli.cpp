#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "volconv.hpp"

// volconv: fit, build, convolve, solve, verify and instability subcommands.
// Exit codes: 0 success, 2 invalid arguments, 3 I/O failure, 4 numerical failure.

using namespace volconv;

namespace {

struct Options {
    std::string basis = "chebyshev";
    double lambda = 1.0, alpha = 0.0, beta = 0.0, scale = 1.0;
    std::optional<std::size_t> M, N;
    std::uint64_t seed = 1;
    std::string in, f, g, kernel, rhs, out, format = "json";
    std::vector<double> domain;
    std::size_t samples = 500;
};

BasisSpec basis_from_flags(const Options& o) {
    BasisSpec b;
    b.kind = parse_kind(o.basis);
    b.lambda = o.lambda;
    b.alpha = o.alpha;
    b.beta = o.beta;
    b.scale = o.scale;
    b.validate();
    return b;
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
    return *v;
}

const std::string& require(const std::string& v, const char* flag) {
    if (v.empty()) throw std::invalid_argument(std::string("missing required flag ") + flag);
    return v;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty())
        std::cout << text;
    else
        write_text_file(o.out, text);
}

std::string series_text(const Options& o, const PolySeries& s) {
    if (o.format == "csv") {
        std::ostringstream os;
        write_series_csv(os, s);
        return os.str();
    }
    return to_json(s).dump(2) + "\n";
}

int run_fit(const Options& o) {
    const auto fn = named::lookup(require(o.f, "--f"));
    const auto basis = basis_from_flags(o);
    if (basis.kind == BasisKind::WeightedLaguerre) {
        emit(o, series_text(o, fit_laguerre(fn, require(o.N, "-N"), basis.scale)));
        return 0;
    }
    if (basis.kind != BasisKind::Chebyshev) throw UnsupportedBasis("fit: only chebyshev and laguerre fits are available");
    Interval dom = canonical_interval;
    if (!o.domain.empty()) {
        if (o.domain.size() != 2) throw std::invalid_argument("--domain takes two values");
        dom = {o.domain[0], o.domain[1]};
    }
    ChopRule rule;
    if (o.N) rule.max_degree = *o.N;
    emit(o, series_text(o, fit_chebyshev(fn, dom, rule)));
    return 0;
}

int run_build(const Options& o) {
    const std::size_t N = require(o.N, "-N");
    Eigen::MatrixXd D;
    if (!o.in.empty()) {
        const auto f = load_series(o.in);
        D = f.basis().finite_interval() ? to_dense(conv_matrix(f, N))
                                        : to_dense(build_laguerre(f.coeffs(), N, f.basis().scale));
    } else {
        const auto basis = basis_from_flags(o);
        const auto a = random_kernel(require(o.M, "-M or --in"), o.seed);
        D = basis.finite_interval() ? to_dense(build(basis, a, N)) : to_dense(build_laguerre(a, N, basis.scale));
    }
    std::ostringstream os;
    write_matrix_csv(os, D);
    emit(o, os.str());
    return 0;
}

int run_convolve(const Options& o) {
    const auto f = load_series(require(o.f, "--f"));
    const auto g = load_series(require(o.g, "--g"));
    emit(o, series_text(o, convolve(f, g)));
    return 0;
}

int run_solve(const Options& o) {
    const VolterraProblem p{load_series(require(o.kernel, "--kernel")), load_series(require(o.rhs, "--rhs"))};
    p.validate();
    const auto u = solve_second_kind(p, require(o.N, "-N"));
    // Residual of the integral equation at 1000 equispaced points.
    const auto dom = p.domain();
    const auto h = convolve(p.kernel, u).relabeled(dom);
    double residual = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = dom.a + dom.length() * i / 999.0;
        residual = std::max(residual, std::abs(u(x) - p.rhs(x) - h(x)));
    }
    emit(o, series_text(o, u));
    std::fprintf(stderr, "residual=%.3e degree=%zu\n", residual, u.degree());
    return 0;
}

int run_verify(const Options& o) {
    const auto basis = basis_from_flags(o);
    if (!basis.finite_interval()) throw UnsupportedBasis("verify: finite-interval basis required");
    const std::size_t M = require(o.M, "-M"), N = require(o.N, "-N");
    const PolySeries f(basis, random_kernel(M, o.seed));
    const auto R = build(basis, f.coeffs(), N);
    ErrorReport rep = M + N + 1 <= coefficient_oracle_limit
                          ? compare_entrywise(R, conv_coeff_oracle_matrix(f, N))
                          : sampled_column_check(R, f, o.samples, o.seed);
    rep.seed = o.seed;
    std::ostringstream os;
    write_error_report_csv(os, rep);
    emit(o, os.str());
    std::fprintf(stderr, "max_abs=%.3e\n", rep.max_abs);
    return 0;
}

int run_instability(const Options& o) {
    const std::size_t M = require(o.M, "-M"), N = require(o.N, "-N");
    if (M + N + 1 > coefficient_oracle_limit) throw OversizeError("instability: M + N + 1 exceeds the oracle limit");
    const PolySeries f(BasisSpec::chebyshev(), random_kernel(M, o.seed));
    const auto oracle = conv_coeff_oracle_matrix(f, N);
    auto naive = compare_entrywise_dense(build_chebyshev_naive(f.coeffs(), N), oracle, M);
    naive.basis = f.basis().name();
    naive.seed = o.seed;
    auto stable = compare_entrywise(build_chebyshev(f.coeffs(), N), oracle);
    stable.seed = o.seed;
    std::ostringstream os;
    os << "# report=naive\n";
    write_error_report_csv(os, naive);
    os << "# report=stable\n";
    write_error_report_csv(os, stable);
    emit(o, os.str());
    std::fprintf(stderr, "naive max_abs=%.3e above_diagonal=%.3e\nstable max_abs=%.3e\n", naive.max_abs,
                 naive.max_above_diagonal(), stable.max_abs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volterra convolution matrices in orthogonal polynomial bases"};
    app.require_subcommand(1);
    Options o;

    auto basis_flags = [&](CLI::App* s) {
        s->add_option("--basis", o.basis, "chebyshev, legendre, gegenbauer, jacobi or laguerre");
        s->add_option("--lambda", o.lambda, "Gegenbauer parameter");
        s->add_option("--alpha", o.alpha, "Jacobi alpha");
        s->add_option("--beta", o.beta, "Jacobi beta");
        s->add_option("--scale", o.scale, "weighted Laguerre scale");
    };
    auto out_flag = [&](CLI::App* s) { s->add_option("--out", o.out, "output path (default stdout)"); };
    auto format_flag = [&](CLI::App* s) {
        s->add_option("--format", o.format, "series format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* fit = app.add_subcommand("fit", "fit a named function");
    basis_flags(fit);
    fit->add_option("--f", o.f, "named function")->required();
    fit->add_option("--domain", o.domain, "interval a b")->expected(2);
    fit->add_option("-N", o.N, "Laguerre degree, or maximum Chebyshev degree");
    out_flag(fit);
    format_flag(fit);

    auto* bld = app.add_subcommand("build", "write a convolution matrix as CSV");
    basis_flags(bld);
    bld->add_option("--in", o.in, "kernel series file");
    bld->add_option("-M", o.M, "random kernel degree");
    bld->add_option("-N", o.N, "degree of the convolved series")->required();
    bld->add_option("--seed", o.seed, "random kernel seed");
    out_flag(bld);

    auto* cnv = app.add_subcommand("convolve", "convolve two series files");
    cnv->add_option("--f", o.f, "first series")->required();
    cnv->add_option("--g", o.g, "second series")->required();
    out_flag(cnv);
    format_flag(cnv);

    auto* slv = app.add_subcommand("solve", "solve a second-kind Volterra equation");
    slv->add_option("--kernel", o.kernel, "kernel series")->required();
    slv->add_option("--rhs", o.rhs, "right-hand side series")->required();
    slv->add_option("-N", o.N, "solution degree")->required();
    out_flag(slv);
    format_flag(slv);

    auto* ver = app.add_subcommand("verify", "compare a built matrix with the quadrature oracle");
    basis_flags(ver);
    ver->add_option("-M", o.M, "kernel degree")->required();
    ver->add_option("-N", o.N, "matrix column count minus one")->required();
    ver->add_option("--seed", o.seed, "random kernel seed");
    ver->add_option("--samples", o.samples, "sample count for large sizes");
    out_flag(ver);

    auto* ins = app.add_subcommand("instability", "naive versus stable Chebyshev builder");
    ins->add_option("-M", o.M, "kernel degree")->required();
    ins->add_option("-N", o.N, "matrix column count minus one")->required();
    ins->add_option("--seed", o.seed, "random kernel seed");
    out_flag(ins);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (fit->parsed()) return run_fit(o);
        if (bld->parsed()) return run_build(o);
        if (cnv->parsed()) return run_convolve(o);
        if (slv->parsed()) return run_solve(o);
        if (ver->parsed()) return run_verify(o);
        return run_instability(o);
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::length_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

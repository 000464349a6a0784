#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/horn.hpp"
#include "hyperpoly/hyperbolicity.hpp"
#include "hyperpoly/interlacing.hpp"
#include "hyperpoly/sdpcheck.hpp"
#include "hyperpoly/zones.hpp"
#include "model_io.hpp"

namespace hyperpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int samples = -1;  // subcommand default when negative
    std::vector<double> alpha_grid;
    bool json = false;
    bool verbose = false;
    bool timing = false;

    std::string l, m, f, h, pair, out;
    std::optional<double> alpha;
    bool all_triples = false;
    std::vector<int> u, s, t;
};

struct Outcome {
    bool verdict = false;
    Json payload = Json::object();
    Json tolerances = Json::object();
    std::vector<std::string> inputs;  // files hashed into the digest
};

Json complex_list(const SpectrumComplex& roots) {
    SpectrumComplex sorted = roots;
    std::sort(sorted.begin(), sorted.end(),
              [](Complex a, Complex b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    Json out = Json::array();
    for (const auto& z : sorted) out.push_back({z.real() + 0.0, z.imag() + 0.0});  // no -0 in reports
    return out;
}

Json matrix_rows(const RealMatrix& a) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(row);
    }
    return rows;
}

Json vector_json(const ComplexVector& x) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back({x(i).real(), x(i).imag()});
    return out;
}

const std::vector<double>& grid_or_default(const Flags& fl) {
    return fl.alpha_grid.empty() ? default_alpha_grid() : fl.alpha_grid;
}

void need(const std::string& value, const char* flag) {
    if (value.empty()) throw ValidationError(std::string("missing required input ") + flag);
}

Outcome check_weak(const Flags& fl) {
    need(fl.l, "--L");
    const MatrixPolynomial l = load_model(fl.l);
    Outcome o;
    o.inputs = {fl.l};
    const SpectrumComplex roots = det_roots(l);
    o.verdict = is_weakly_hyperbolic(l, fl.tol);
    o.payload["det_roots"] = complex_list(roots);
    o.tolerances["real_root"] = fl.tol;
    return o;
}

Outcome check_hyperbolic(const Flags& fl) {
    need(fl.l, "--L");
    const MatrixPolynomial l = load_model(fl.l);
    const int samples = fl.samples < 0 ? 200 : fl.samples;
    const HyperbolicityVerdict v = is_hyperbolic(l, samples, fl.seed, fl.tol);
    Outcome o;
    o.inputs = {fl.l};
    o.verdict = v.hyperbolic;
    o.payload["vectors_tested"] = v.vectors_tested;
    o.payload["samples"] = samples;
    o.payload["witness"] = v.witness ? vector_json(*v.witness) : Json(nullptr);
    o.payload["coefficient_witness"] = v.coefficient_witness ? Json(*v.coefficient_witness) : Json(nullptr);
    o.payload["note"] = "true means no counterexample was found";
    o.tolerances["real_root"] = fl.tol;
    return o;
}

Outcome star(const Flags& fl) {
    need(fl.l, "--L");
    need(fl.m, "--M");
    const MatrixPolynomial l = load_model(fl.l), m = load_model(fl.m);
    const StarReport r = condition_star(l, m, grid_or_default(fl), fl.tol);
    Outcome o;
    o.inputs = {fl.l, fl.m};
    o.verdict = r.verdict;
    o.payload["alpha_grid"] = r.alpha_grid;
    Json failures = Json::array();
    for (const auto& fail : r.failures) failures.push_back({{"alpha", fail.alpha}, {"roots", complex_list(fail.offending_roots)}});
    o.payload["failures"] = failures;
    o.payload["leading_diff_real"] = r.leading_diff_real;
    o.payload["leading_diff_spectrum"] = complex_list(r.leading_diff_spectrum);
    o.tolerances["real_root"] = fl.tol;
    return o;
}

Outcome interlace(const Flags& fl) {
    need(fl.f, "--f");
    need(fl.h, "--h");
    const ScalarPolynomial f = load_scalar(fl.f), h = load_scalar(fl.h);
    const ObreschkoffReport r = obreschkoff_report(f, h, fl.tol);
    Outcome o;
    o.inputs = {fl.f, fl.h};
    o.verdict = r.cond1 && r.cond2 && r.cond3 && r.cond4;
    o.payload["every_pencil_direction_real_rooted"] = r.cond1;
    o.payload["every_affine_combination_real_rooted"] = r.cond2;
    o.payload["residues_share_sign"] = r.cond3;
    o.payload["roots_interlace"] = r.cond4;
    o.payload["all_agree"] = r.all_agree();
    o.payload["direction_probes"] = r.cond1_probes;
    o.payload["affine_probes"] = r.cond2_probes;
    o.payload["residue_detail"] = r.cond3_detail;
    o.payload["interlace_detail"] = r.cond4_detail;
    o.tolerances["real_root"] = fl.tol;
    o.tolerances["simplicity"] = kSimplicityTol;
    o.tolerances["residue_sign"] = kResidueSignTol;
    o.tolerances["gcd_cutoff"] = kGcdCutoff;
    return o;
}

Json certificate_json(const SymmetrizerCertificate& c) {
    return {{"feasible", c.feasible},
            {"min_eig", c.min_eig},
            {"constraint_residual", c.constraint_residual},
            {"rhs_scale", c.rhs_scale},
            {"p", matrix_rows(c.p.matrix())}};
}

Outcome sdp(const Flags& fl) {
    need(fl.f, "--f");
    need(fl.h, "--h");
    const ScalarPolynomial f = load_scalar(fl.f), h = load_scalar(fl.h);
    SdpOptions opts;
    opts.seed = fl.seed;
    const MatrixPolynomial lf = MatrixPolynomial::from_scalar(f), lh = MatrixPolynomial::from_scalar(h);
    const SymmetrizerCertificate sym = feasibility_symmetrizer(companion(lf).real(), companion(lh).real(), opts);
    const SymmetrizerCertificate real = feasibility_realization(minimal_realization(f, h), opts);
    Outcome o;
    o.inputs = {fl.f, fl.h};
    o.verdict = sym.feasible && real.feasible;
    o.payload["common_symmetrizer"] = certificate_json(sym);
    o.payload["realization"] = certificate_json(real);
    o.payload["forms_agree"] = sym.feasible == real.feasible;
    o.tolerances["pd_margin"] = opts.pd_margin;
    o.tolerances["eq_tol"] = opts.eq_tol;
    return o;
}

Outcome build_pair(const Flags& fl) {
    Outcome o;
    RealMatrix a, b;
    if (!fl.f.empty() || !fl.h.empty()) {
        need(fl.f, "--f");
        need(fl.h, "--h");
        const SymmetricPair p = build_symmetric_pair(load_scalar(fl.f), load_scalar(fl.h), fl.tol);
        o.inputs = {fl.f, fl.h};
        o.payload["construction"] = "rank-one";
        o.payload["sign"] = p.sign;
        a = p.a.matrix();
        b = p.b.matrix();
    } else {
        need(fl.l, "--L or --f");
        need(fl.m, "--M");
        const DiagonalPencilPair p = build_diagonal_pencil_pair(load_model(fl.l), load_model(fl.m), fl.tol);
        o.inputs = {fl.l, fl.m};
        o.payload["construction"] = "diagonal";
        a = p.a.matrix();
        b = p.b.matrix();
    }
    o.verdict = true;
    o.payload["a"] = matrix_rows(a);
    o.payload["b"] = matrix_rows(b);
    if (!fl.out.empty()) {
        std::ofstream file(fl.out);
        if (!file) throw ValidationError("cannot write " + fl.out);
        file << Json{{"a", matrix_rows(a)}, {"b", matrix_rows(b)}}.dump(2) << '\n';
    }
    o.tolerances["real_root"] = fl.tol;
    return o;
}

Json zones_json(const SpectralZones& z) {
    Json iv = Json::array();
    for (const auto& [lo, hi] : z.intervals) iv.push_back({lo, hi});
    return {{"intervals", iv}, {"sample_count", z.sample_count}, {"refined", z.refined}, {"tolerance", z.tolerance}};
}

ZoneOptions zone_options(const Flags& fl) {
    ZoneOptions opts;
    if (fl.samples >= 0) opts.samples = fl.samples;
    opts.seed = fl.seed;
    opts.tol = fl.tol;
    return opts;
}

Outcome zones(const Flags& fl) {
    need(fl.l, "--L");
    const ZoneOptions opts = zone_options(fl);
    const SpectralZones z = zone_estimates(load_model(fl.l), opts);
    Outcome o;
    o.inputs = {fl.l};
    o.verdict = zones_consistent(z);
    o.payload["zones"] = zones_json(z);
    o.tolerances["real_root"] = opts.tol;
    o.tolerances["overlap"] = 1e-8;
    return o;
}

Outcome convex_zones(const Flags& fl) {
    need(fl.l, "--L");
    need(fl.m, "--M");
    const ZoneOptions opts = zone_options(fl);
    const ConvexCombinationVerdict v = convex_combination_hyperbolic(load_model(fl.l), load_model(fl.m), opts);
    Outcome o;
    o.inputs = {fl.l, fl.m};
    o.verdict = v.holds;
    o.payload["binding_j"] = v.binding_j ? Json(*v.binding_j) : Json(nullptr);
    o.payload["boundary"] = v.boundary;
    o.payload["margins"] = v.margins;
    o.payload["zones_l"] = zones_json(v.zones_l);
    o.payload["zones_m"] = zones_json(v.zones_m);
    o.payload["note"] = "sufficient for hyperbolicity of every convex combination; necessary only for n = 1";
    o.tolerances["real_root"] = opts.tol;
    o.tolerances["margin"] = v.tolerance;
    return o;
}

Outcome horn_verify(const Flags& fl) {
    need(fl.l, "--L");
    need(fl.m, "--M");
    const MatrixPolynomial l = load_model(fl.l), m = load_model(fl.m);
    const int size = static_cast<int>(l.size()) * l.degree();
    std::vector<HornTriple> triples;
    if (fl.all_triples) {
        triples = horn_triples(size);
    } else {
        if (fl.u.empty()) throw ValidationError("give --all-triples or --U, --S and --T");
        HornTriple t{fl.u, fl.s, fl.t, size};
        try {
            validate(t);
        } catch (const ShapeError& e) {
            throw ValidationError(e.what());
        }
        triples.push_back(t);
    }
    const std::vector<double> alphas = fl.alpha ? std::vector<double>{*fl.alpha} : grid_or_default(fl);
    const double tol = 1e-9;
    Outcome o;
    o.inputs = {fl.l, fl.m};
    o.verdict = true;
    Json failures = Json::array();
    std::size_t checks = 0;
    for (double alpha : alphas)
        for (const auto& t : triples) {
            const HornCheck c = verify_horn_inequality(l, m, alpha, t, tol);
            ++checks;
            if (!c.holds) {
                o.verdict = false;
                failures.push_back({{"alpha", alpha}, {"u", t.u}, {"s", t.s}, {"t", t.t}, {"lhs", c.lhs}, {"rhs", c.rhs}});
            }
        }
    o.payload["m"] = size;
    o.payload["alphas"] = alphas;
    o.payload["triples"] = triples.size();
    o.payload["checks"] = checks;
    o.payload["failures"] = failures;
    o.tolerances["inequality"] = tol;
    return o;
}

Outcome coincide(const Flags& fl) {
    need(fl.l, "--L");
    need(fl.m, "--M");
    need(fl.pair, "--pair");
    const MatrixPolynomial l = load_model(fl.l), m = load_model(fl.m);
    const auto [a, b] = parse_pair([&] {
        try {
            return nlohmann::json::parse(read_file(fl.pair));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what());
        }
    }());
    const double tol = 1e-7;
    const CoincidenceReport r = verify_coincidence(l, m, a, b, grid_or_default(fl), tol, fl.tol);
    Outcome o;
    o.inputs = {fl.l, fl.m, fl.pair};
    o.verdict = r.verdict;
    o.payload["alpha_grid"] = r.alpha_grid;
    o.payload["mismatches"] = r.mismatches;
    o.payload["max_mismatch"] = r.max_mismatch;
    o.tolerances["coincidence"] = tol;
    o.tolerances["real_root"] = fl.tol;
    return o;
}

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string digest(const std::string& command, const Outcome& o, const Flags& fl) {
    std::uint64_t d = fnv1a(command);
    for (const auto& path : o.inputs) d = fnv1a(read_file(path), fnv1a("\x1f", d));
    Json knobs{{"tol", fl.tol}, {"seed", fl.seed}, {"samples", fl.samples}, {"alpha_grid", fl.alpha_grid},
               {"alpha", fl.alpha ? Json(*fl.alpha) : Json(nullptr)}, {"u", fl.u}, {"s", fl.s}, {"t", fl.t},
               {"all_triples", fl.all_triples}};
    return hex(fnv1a(knobs.dump(), d));
}

void emit(std::ostream& out, const Json& report, bool as_json) {
    if (as_json) {
        out << report.dump(2) << '\n';
        return;
    }
    const Json flat = report.flatten();
    for (const auto& [key, value] : flat.items()) out << key << " = " << value.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperbolicity and interlacing checks for monic matrix polynomials"};
    // --h names a polynomial here, so help is long-form only.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    Flags fl;
    app.add_option("--tol", fl.tol, "root-reality tolerance")->capture_default_str();
    app.add_option("--seed", fl.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--samples", fl.samples, "random vectors (default depends on the command)");
    app.add_option("--alpha-grid", fl.alpha_grid, "comma-separated alpha values")->delimiter(',');
    app.add_flag("--json", fl.json, "report as JSON");
    app.add_flag("--verbose", fl.verbose, "human summary on stderr");
    app.add_flag("--timing", fl.timing, "add wall time to the report (breaks byte-identical output)");

    using Runner = std::function<Outcome(const Flags&)>;
    std::vector<std::pair<CLI::App*, Runner>> commands;
    auto sub = [&](const char* name, const char* help, Runner run) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        commands.emplace_back(s, std::move(run));
        return s;
    };
    auto with_l = [&](CLI::App* s) { s->add_option("--L", fl.l, "model file"); };
    auto with_lm = [&](CLI::App* s) {
        s->add_option("--L", fl.l, "model file");
        s->add_option("--M", fl.m, "model file");
    };
    auto with_fh = [&](CLI::App* s) {
        s->add_option("--f", fl.f, "scalar model file");
        s->add_option("--h", fl.h, "scalar model file");
    };

    with_l(sub("check-weak", "det L has only real roots", check_weak));
    with_l(sub("check-hyperbolic", "Monte Carlo hyperbolicity", check_hyperbolic));
    with_lm(sub("star", "weak hyperbolicity of all affine combinations", star));
    with_fh(sub("interlace", "four interlacing criteria", interlace));
    with_fh(sub("sdp", "semidefinite feasibility forms", sdp));
    CLI::App* bp = sub("build-pair", "symmetric A, B from a rank-one or diagonal pair", build_pair);
    with_lm(bp);
    with_fh(bp);
    bp->add_option("--out", fl.out, "write {a, b} to this file");
    with_l(sub("zones", "spectral zone estimates", zones));
    with_lm(sub("convex-zones", "zone test for every convex combination", convex_zones));
    CLI::App* hv = sub("horn-verify", "Horn inequalities on determinant roots", horn_verify);
    with_lm(hv);
    hv->add_option("--alpha", fl.alpha, "single alpha (default: alpha grid)");
    hv->add_flag("--all-triples", fl.all_triples, "every Horn triple for m = n * ell");
    hv->add_option("--U", fl.u)->delimiter(',');
    hv->add_option("--S", fl.s)->delimiter(',');
    hv->add_option("--T", fl.t)->delimiter(',');
    CLI::App* co = sub("coincide", "determinant roots against eigenvalues of alpha A + (1 - alpha) B", coincide);
    with_lm(co);
    co->add_option("--pair", fl.pair, "file with {a, b}");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParse;
    }

    std::string name;
    Runner run;
    for (const auto& [s, r] : commands)
        if (s->parsed()) {
            name = s->get_name();
            run = r;
        }

    Json report;
    report["command"] = name;
    const auto start = std::chrono::steady_clock::now();
    int code = kHolds;
    try {
        const Outcome o = run(fl);
        report["digest"] = digest(name, o, fl);
        report["verdict"] = o.verdict;
        report["seed"] = fl.seed;
        report["tolerances"] = o.tolerances;
        report["result"] = o.payload;
        code = o.verdict ? kHolds : kFails;
    } catch (const ParseError& e) {
        report["error"] = {{"kind", "parse"}, {"message", e.what()}};
        code = kParse;
    } catch (const ValidationError& e) {
        report["error"] = {{"kind", "validation"}, {"message", e.what()}};
        code = kValidation;
    } catch (const ConvergenceError& e) {
        report["error"] = {{"kind", "non-convergence"}, {"message", e.what()}};
        code = kNonConvergence;
    } catch (const Error& e) {
        // Shape, precondition, non-real or degenerate input: the data does not meet the command's hypotheses.
        report["error"] = {{"kind", "validation"}, {"message", e.what()}};
        code = kValidation;
    }
    if (fl.timing)
        report["wall_time_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(out, report, fl.json);
    if (fl.verbose) {
        err << name << ": ";
        if (report.contains("error"))
            err << "error (" << report["error"]["kind"].get<std::string>() << "): "
                << report["error"]["message"].get<std::string>() << '\n';
        else
            err << (report["verdict"].get<bool>() ? "holds" : "fails") << '\n';
    }
    return code;
}

}  // namespace hyperpoly::cli

#include "rap/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "rap/classify.hpp"
#include "rap/error.hpp"
#include "rap/fmu.hpp"
#include "rap/graphs.hpp"
#include "rap/literal.hpp"
#include "rap/oracles.hpp"
#include "rap/serialize.hpp"

namespace rap {

namespace {

std::string fmt_double(double x) {
    if (std::abs(x) < 5e-13) x = 0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string fmt(const ComplexF& z, int = 1) {
    const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
    if (im == 0) return fmt_double(z.real());
    std::string s = fmt_double(z.real());
    s += im < 0 ? "-" : "+";
    return s + fmt_double(std::abs(im)) + "i";
}

std::string fmt(const Cyclo& x, int n) { return format_cyclo(x, n); }

template <class T>
std::string join(const std::vector<T>& xs, int n, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + fmt(xs[i], n);
    return out;
}

// "RE", "RE+IMi" or "RE-IMi" with decimal parts.
std::optional<ComplexF> parse_complex_decimal(const std::string& s) {
    static const std::regex re(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*i)?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) return std::nullopt;
    const double real = std::stod(m[1].str());
    double imag = 0;
    if (m[2].matched) imag = (m[2].str() == "-" ? -1 : 1) * std::stod(m[3].str());
    return ComplexF{real, imag};
}

std::vector<ComplexF> parse_float_list(const std::string& text, int n) {
    std::vector<ComplexF> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(parse_cyclo(item, n).to_complex());
        } catch (const ParseError& e) {
            const auto z = parse_complex_decimal(item);
            if (!z) throw ParseError("cannot read coefficient '" + item + "'", start);
            out.push_back(*z);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct Context {
    const RunConfig& cfg;
    std::ostream& out;
    bool json() const { return cfg.format == "json"; }
};

Json header(const RunConfig& cfg, int n) {
    Json j;
    j["command"] = cfg.subcommand;
    j["root_order"] = n;
    j["mode"] = cfg.mode == Mode::Exact ? "exact" : "float";
    return j;
}

PolySpec<Cyclo> exact_poly(const RunConfig& cfg) {
    if (cfg.coeffs.empty()) throw Error(ErrorKind::InvalidInput, "--coeffs is required");
    return PolySpec<Cyclo>(parse_cyclo_list(cfg.coeffs, cfg.root_order));
}

PolySpec<ComplexF> float_poly(const RunConfig& cfg) {
    if (cfg.coeffs.empty()) throw Error(ErrorKind::InvalidInput, "--coeffs is required");
    return PolySpec<ComplexF>(parse_float_list(cfg.coeffs, cfg.root_order));
}

// Runs body with the exact or float polynomial, depending on --mode.
template <class F>
int with_poly(const RunConfig& cfg, F&& body) {
    if (cfg.mode == Mode::Exact) {
        const auto p = exact_poly(cfg);
        return body(p, document_order(cfg.root_order, p.coeffs()));
    }
    return body(float_poly(cfg), 1);
}

int cmd_show(const Context& c) {
    return with_poly(c.cfg, [&](const auto& p, int n) {
        const auto m = ra_matrix(p, c.cfg.rows);
        if (c.json()) {
            Json j = header(c.cfg, n);
            j["coeffs"] = scalar_list(p.coeffs(), n);
            Json rows = Json::array();
            for (const auto& row : m.rows) rows.push_back(scalar_list(row, n));
            j["rows"] = rows;
            c.out << dump(j);
            return kExitOk;
        }
        std::vector<std::vector<std::string>> cells;
        std::vector<std::size_t> width;
        for (const auto& row : m.rows) {
            cells.emplace_back();
            for (std::size_t k = 0; k < row.size(); ++k) {
                cells.back().push_back(fmt(row[k], n));
                if (width.size() <= k) width.push_back(0);
                width[k] = std::max(width[k], cells.back().back().size());
            }
        }
        for (const auto& row : cells) {
            std::string line;
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) line += "  ";
                line += std::string(width[k] - row[k].size(), ' ') + row[k];
            }
            c.out << line << "\n";
        }
        return kExitOk;
    });
}

int cmd_psums(const Context& c) {
    return with_poly(c.cfg, [&](const auto& p, int n) {
        using T = typename std::decay_t<decltype(p.coeffs())>::value_type;
        const auto seq = psum_sequence(p, c.cfg.count);
        std::optional<EventualPeriod<T>> ep;
        try {
            ep = detect_eventual_period(std::span<const T>(seq), seq.size(), c.cfg.tol);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPeriodic) throw;
        }
        if (c.json()) {
            Json j = header(c.cfg, n);
            j["coeffs"] = scalar_list(p.coeffs(), n);
            j["count"] = c.cfg.count;
            j["terms"] = scalar_list(seq, n);
            j["periodic"] = ep.has_value();
            j["eventual_period"] = ep ? to_json(*ep, n) : Json(nullptr);
            c.out << dump(j);
        } else {
            c.out << "S_[1.." << c.cfg.count << "] = " << join(seq, n) << "\n";
            if (ep) {
                c.out << "eventually periodic: preperiod " << ep->preperiod << ", period " << ep->period << "\n";
                c.out << "prefix: " << join(ep->prefix, n) << "\n";
                c.out << "block: " << join(ep->block, n) << "\n";
            } else {
                c.out << "not periodic within " << c.cfg.count << " terms\n";
            }
        }
        return ep ? kExitOk : kExitNegative;
    });
}

int cmd_period(const Context& c) {
    return with_poly(c.cfg, [&](const auto& p, int n) {
        const auto v = circulant_of(p);
        const auto eig = eigenvalues(v);
        int en = n;
        if constexpr (std::is_same_v<std::decay_t<decltype(eig)>, std::vector<Cyclo>>) en = document_order(n, eig);
        std::optional<PeriodInfo> pi;
        std::string why;
        const long budget = default_max_steps(p.degree());
        try {
            pi = matrix_period(v, budget, c.cfg.tol);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PeriodNotFound) throw;
            why = e.what();
        }
        if (c.json()) {
            Json j = header(c.cfg, en);
            j["coeffs"] = scalar_list(p.coeffs(), en);
            j["eigenvalues"] = scalar_list(eig, en);
            j["periodic"] = pi.has_value();
            j["matrix_period"] = pi ? to_json(*pi) : Json(nullptr);
            j["note"] = why;
            c.out << dump(j);
        } else {
            c.out << "eigenvalues: " << join(eig, en) << "\n";
            if (pi)
                c.out << "V: preperiod " << pi->preperiod << ", period " << pi->period
                      << (pi->is_order() ? " (order)" : "") << "\n";
            else
                c.out << "V: no period (" << why << ")\n";
        }
        return pi ? kExitOk : kExitNegative;
    });
}

int cmd_classify(const Context& c) {
    const ClassifyOptions opt{0, c.cfg.tol};
    Classification cls;
    int n = 1;
    std::optional<EventualPeriod<Cyclo>> measured;
    if (c.cfg.mode == Mode::Exact) {
        const auto p = exact_poly(c.cfg);
        n = document_order(c.cfg.root_order, p.coeffs());
        cls = classify(p, opt);
        if (cls.verdict == Verdict::PsumsPeriodic) {
            const int terms = std::max(c.cfg.count, 3 * cls.predicted_period.value_or(1) + 8);
            try {
                measured = measure_psum_period(p, terms);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotPeriodic) throw;
            }
        }
    } else {
        const auto p = float_poly(c.cfg);
        if (p.degree() != 2) throw Error(ErrorKind::InvalidInput, "float classification covers quadratics only");
        cls = classify_quadratic_float(p[0], p[1], p[2], opt);
    }
    if (c.json()) {
        Json j = header(c.cfg, n);
        Json body = to_json(cls, n);
        j["root_order"] = body["root_order"];
        body.erase("root_order");
        j["classification"] = body;
        j["measured"] = measured ? to_json(*measured, j["root_order"].get<int>()) : Json(nullptr);
        c.out << dump(j);
    } else {
        c.out << "case: " << to_string(cls.case_tag) << "\n";
        c.out << "verdict: " << to_string(cls.verdict) << "\n";
        if (cls.mu) c.out << "mu: " << *cls.mu << " (matrix preperiod " << *cls.matrix_preperiod << ")\n";
        if (cls.predicted_period) c.out << "predicted psum period: " << *cls.predicted_period << "\n";
        if (measured)
            c.out << "measured psum period: " << measured->period << " (preperiod " << measured->preperiod << ")\n";
        if (cls.predictor) c.out << "S_[k] = " << cls.predictor->text << " for k >= 2\n";
        const int pn = to_json(cls, n)["root_order"].get<int>();
        for (const auto& [name, v] : cls.parameters)
            c.out << name << " = " << std::visit([&](const auto& x) { return fmt(x, pn); }, v) << "\n";
        if (cls.float_verified) c.out << "decided in floating point\n";
        if (!cls.note.empty()) c.out << "note: " << cls.note << "\n";
    }
    return cls.verdict == Verdict::PsumsPeriodic ? kExitOk : kExitNegative;
}

int cmd_fmu(const Context& c) {
    const FmuPoly f = f_mu(c.cfg.mu);
    const auto roots = real_roots(f, c.cfg.tol);
    if (c.json()) {
        Json j;
        j["command"] = "fmu";
        j["fmu"] = to_json(f, roots);
        c.out << dump(j);
        return kExitOk;
    }
    c.out << format_rat_poly(f.coeffs) << "; roots: ";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) c.out << ", ";
        c.out << (roots[i].closed_form.empty() ? fmt_double(roots[i].approx) : roots[i].closed_form);
    }
    c.out << "\n";
    std::string row;
    for (const auto& x : f_mu_integer_row(c.cfg.mu)) row += (row.empty() ? "" : " ") + x.get_str();
    c.out << "integer row: " << row << "\n";
    return kExitOk;
}

int cmd_verify(const Context& c) {
    const auto reports = run_suite(c.cfg.suite, c.cfg.kmax, c.cfg.seed);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass;
    if (c.json()) {
        Json j;
        j["command"] = "verify";
        j["suite"] = c.cfg.suite;
        j["seed"] = c.cfg.seed;
        j["pass"] = ok;
        Json rs = Json::array();
        for (const auto& r : reports) rs.push_back(to_json(r));
        j["reports"] = rs;
        c.out << dump(j);
    } else {
        for (const auto& r : reports) {
            c.out << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.range << "] " << r.lhs.size() << " comparisons";
            if (r.first_mismatch) {
                const std::size_t i = *r.first_mismatch;
                const int n = document_order(document_order(1, {r.lhs[i]}), {r.rhs[i]});
                c.out << "; first mismatch at " << r.labels[i] << ": " << fmt(r.lhs[i], n) << " vs " << fmt(r.rhs[i], n);
            }
            c.out << "\n";
        }
    }
    return ok ? kExitOk : kExitNegative;
}

int cmd_plot(const Context& c) {
    if (c.cfg.out.empty()) throw Error(ErrorKind::InvalidInput, "--out is required");
    if (!c.cfg.family.empty()) {
        const auto files = figure_family(parse_figure(c.cfg.family), c.cfg.out);
        if (c.json()) {
            Json j;
            j["command"] = "plot";
            j["family"] = to_string(parse_figure(c.cfg.family));
            Json fs = Json::array();
            for (const auto& f : files) fs.push_back(f.string());
            j["files"] = fs;
            c.out << dump(j);
        } else {
            for (const auto& f : files) c.out << f.string() << "\n";
        }
        return kExitOk;
    }
    return with_poly(c.cfg, [&](const auto& p, int n) {
        using T = typename std::decay_t<decltype(p.coeffs())>::value_type;
        const auto seq = psum_sequence(p, c.cfg.count);
        std::optional<EventualPeriod<T>> ep;
        try {
            ep = detect_eventual_period(std::span<const T>(seq), seq.size(), c.cfg.tol);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPeriodic) throw;
            c.out << "not periodic within " << c.cfg.count << " terms; nothing drawn\n";
            return kExitNegative;
        }
        const std::vector<T> used(seq.begin(), seq.begin() + ep->preperiod + 2 * ep->period);
        const PlaneGraph g = psum_graph(used);
        std::ofstream os(c.cfg.out, std::ios::binary);
        os << render_svg(g, {}, "p = " + join(p.coeffs(), n, ", "));
        os.close();
        if (!os) throw Error(ErrorKind::Io, "cannot write " + c.cfg.out);
        if (c.json()) {
            Json j = header(c.cfg, n);
            j["file"] = c.cfg.out;
            j["vertices"] = g.vertices.size();
            j["edges"] = g.edges.size();
            c.out << dump(j);
        } else {
            c.out << c.cfg.out << ": " << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
        }
        return kExitOk;
    });
}

void add_poly_flags(CLI::App* sub, RunConfig& cfg, std::string& mode) {
    sub->add_option("--root-order", cfg.root_order, "N, so that z in --coeffs is zeta_N")->check(CLI::PositiveNumber);
    sub->add_option("--coeffs", cfg.coeffs, "comma-separated a_0, ..., a_d, e.g. \"1/3*z^2 + 1/3, -z\"");
    sub->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", cfg.tol, "float-mode tolerance")->check(CLI::PositiveNumber);
}

void add_format_flag(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidInput:
    case ErrorKind::InvalidPolynomial:
    case ErrorKind::InvalidOrder:
    case ErrorKind::Embedding:
    case ErrorKind::NonUnitConstantTerm:
    case ErrorKind::DivisionByZero:
        return kExitUsage;
    case ErrorKind::PeriodNotFound:
    case ErrorKind::NotPeriodic:
        return kExitNegative;
    default:
        return kExitInternal;
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string mode = "exact";
    CLI::App app{"Partial sums of Riordan array columns for p(t) and 1/(1 - t^(d+1))", "rapsum"};
    app.require_subcommand(1, 1);

    auto* show = app.add_subcommand("show", "print the first rows of the Riordan array");
    add_poly_flags(show, cfg, mode);
    add_format_flag(show, cfg);
    show->add_option("--rows", cfg.rows, "number of rows")->check(CLI::Range(1, 200));

    auto* psums = app.add_subcommand("psums", "column partial sums S_[k] and their eventual period");
    add_poly_flags(psums, cfg, mode);
    add_format_flag(psums, cfg);
    psums->add_option("--count", cfg.count, "number of terms")->check(CLI::Range(1, 2000));

    auto* period = app.add_subcommand("period", "period of the circulant matrix V");
    add_poly_flags(period, cfg, mode);
    add_format_flag(period, cfg);

    auto* cls = app.add_subcommand("classify", "decide periodicity of the partial sums");
    add_poly_flags(cls, cfg, mode);
    add_format_flag(cls, cfg);
    cls->add_option("--count", cfg.count, "minimum number of terms for the measured period")->check(CLI::Range(1, 2000));

    auto* fmu = app.add_subcommand("fmu", "the polynomial f_mu and its real roots");
    fmu->add_option("mu", cfg.mu, "mu")->required()->check(CLI::Range(1, 200));
    fmu->add_option("--tol", cfg.tol, "root isolation width")->check(CLI::PositiveNumber);
    add_format_flag(fmu, cfg);

    auto* verify = app.add_subcommand("verify", "run identity checks against series extraction");
    verify->add_option("suite", cfg.suite, "lemma6, lemma7, prop9, corollary, gflinear, gfb0, lemma4 or all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--kmax", cfg.kmax, "largest k")->check(CLI::Range(2, 200));
    verify->add_option("--seed", cfg.seed, "seed for the randomized suite");
    add_format_flag(verify, cfg);

    auto* plot = app.add_subcommand("plot", "write SVG graphs of partial-sum sequences");
    plot->add_option("--family", cfg.family, "fig1 .. fig6");
    plot->add_option("--out", cfg.out, "output directory (--family) or SVG file (--coeffs)");
    add_poly_flags(plot, cfg, mode);
    add_format_flag(plot, cfg);
    plot->add_option("--count", cfg.count, "number of terms")->check(CLI::Range(1, 2000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.mode = mode == "float" ? Mode::Float : Mode::Exact;
    if (cfg.subcommand == "plot" && cfg.family.empty() && cfg.coeffs.empty()) {
        err << "plot: give --family or --coeffs\n";
        return kExitUsage;
    }

    std::ostringstream buffer;
    const Context ctx{cfg, buffer};
    try {
        if (cfg.root_order > max_root_order())
            throw Error(ErrorKind::InvalidOrder, "--root-order exceeds " + std::to_string(max_root_order()));
        int code = kExitOk;
        if (cfg.subcommand == "show") code = cmd_show(ctx);
        else if (cfg.subcommand == "psums") code = cmd_psums(ctx);
        else if (cfg.subcommand == "period") code = cmd_period(ctx);
        else if (cfg.subcommand == "classify") code = cmd_classify(ctx);
        else if (cfg.subcommand == "fmu") code = cmd_fmu(ctx);
        else if (cfg.subcommand == "verify") code = cmd_verify(ctx);
        else if (cfg.subcommand == "plot") code = cmd_plot(ctx);
        out << buffer.str();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace rap

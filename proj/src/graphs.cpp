#include "rap/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "rap/classify.hpp"
#include "rap/error.hpp"
#include "rap/fmu.hpp"
#include "rap/literal.hpp"

namespace rap {

namespace {

PlaneGraph build(const std::vector<int>& ids, std::vector<ComplexF> vertices) {
    PlaneGraph g;
    g.vertices = std::move(vertices);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < ids.size(); ++i) {
        int u = ids[i - 1], v = ids[i];
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.insert({u, v}).second) g.edges.emplace_back(u, v);
    }
    return g;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

template <class T>
FigureItem make_item(std::string label, ComplexF parameter, const PolySpec<T>& p, int n_terms, double tol) {
    const auto seq = psum_sequence(p, n_terms);
    const auto ep = detect_eventual_period(std::span<const T>(seq), seq.size(), tol);
    FigureItem item;
    item.label = std::move(label);
    item.parameter = parameter;
    item.preperiod = ep.preperiod;
    item.period = ep.period;
    const std::vector<T> used(seq.begin(), seq.begin() + ep.preperiod + 2 * ep.period);
    for (const auto& x : used) item.seq.push_back(Scalar<T>::to_complex(x));
    if constexpr (Scalar<T>::exact)
        item.graph = psum_graph(used);
    else
        item.graph = psum_graph(item.seq);
    return item;
}

std::string cyclo_label(const Cyclo& a) { return "a = " + format_cyclo(a, a.order()); }

std::string float_label(ComplexF a) {
    char buf[96];
    const double im = std::abs(a.imag()) < 1e-12 ? 0.0 : a.imag();
    std::snprintf(buf, sizeof buf, "a = %.6f%+.6fi", a.real(), im);
    return buf;
}

double largest_root(int mu) {
    const auto roots = real_roots(f_mu(mu), 1e-13);
    return roots.back().approx;
}

std::vector<FigureItem> quad_c_items(int mu) {
    const double r = largest_root(mu);
    auto sols = solve_a_quadC_float(r, mu);
    std::erase_if(sols, [](ComplexF a) { return a.imag() < -1e-12; });
    std::sort(sols.begin(), sols.end(), [](ComplexF x, ComplexF y) { return std::arg(x) < std::arg(y); });
    std::vector<FigureItem> out;
    for (const ComplexF a : sols) {
        const PolySpec<ComplexF> p({a, a * r, -a * (1 + r)});
        out.push_back(make_item(float_label(a) + ", r = " + num(r), a, p, 80, 1e-7));
    }
    return out;
}

} // namespace

PlaneGraph psum_graph(const std::vector<ComplexF>& seq, double dedup_tol) {
    if (seq.empty()) throw Error(ErrorKind::InvalidInput, "psum_graph needs a nonempty sequence");
    std::vector<ComplexF> vertices;
    std::vector<int> ids;
    for (const auto& z : seq) {
        auto it = std::find_if(vertices.begin(), vertices.end(),
                               [&](const ComplexF& v) { return Scalar<ComplexF>::equal(v, z, dedup_tol); });
        if (it == vertices.end()) {
            ids.push_back(static_cast<int>(vertices.size()));
            vertices.push_back(z);
        } else {
            ids.push_back(static_cast<int>(it - vertices.begin()));
        }
    }
    return build(ids, std::move(vertices));
}

PlaneGraph psum_graph(const std::vector<Cyclo>& seq) {
    if (seq.empty()) throw Error(ErrorKind::InvalidInput, "psum_graph needs a nonempty sequence");
    std::vector<Cyclo> distinct;
    std::vector<int> ids;
    for (const auto& x : seq) {
        auto it = std::find(distinct.begin(), distinct.end(), x);
        ids.push_back(static_cast<int>(it - distinct.begin()));
        if (it == distinct.end()) distinct.push_back(x);
    }
    std::vector<ComplexF> vertices;
    for (const auto& x : distinct) vertices.push_back(x.to_complex());
    return build(ids, std::move(vertices));
}

std::string render_svg(const PlaneGraph& g, const RenderSpec& spec, const std::string& title) {
    if (spec.width <= 0 || spec.height <= 0 || spec.margin < 0 || spec.margin >= 0.5)
        throw Error(ErrorKind::InvalidInput, "render spec needs positive size and margin in [0, 0.5)");
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    for (const auto& v : g.vertices) {
        x0 = std::min(x0, v.real());
        x1 = std::max(x1, v.real());
        y0 = std::min(y0, v.imag());
        y1 = std::max(y1, v.imag());
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const double pad = spec.margin * std::min(spec.width, spec.height);
    const double scale = std::min(spec.width - 2 * pad, spec.height - 2 * pad) / span;
    const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
    auto px = [&](double x) { return spec.width / 2.0 + (x - cx) * scale; };
    auto py = [&](double y) { return spec.height / 2.0 - (y - cy) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    if (!title.empty()) out += "  <title>" + escape(title) + "</title>\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (spec.axes) {
        out += "  <path d=\"M 0 " + num(py(0)) + " H " + std::to_string(spec.width) + " M " + num(px(0)) + " 0 V " +
               std::to_string(spec.height) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\" fill=\"none\"/>\n";
    }
    out += "  <g stroke=\"#1f4e9a\" stroke-width=\"" + num(spec.stroke_width) + "\">\n";
    for (const auto& [u, v] : g.edges) {
        const auto& a = g.vertices[u];
        const auto& b = g.vertices[v];
        out += "    <line x1=\"" + num(px(a.real())) + "\" y1=\"" + num(py(a.imag())) + "\" x2=\"" + num(px(b.real())) +
               "\" y2=\"" + num(py(b.imag())) + "\"/>\n";
    }
    out += "  </g>\n  <g fill=\"#c0392b\">\n";
    for (const auto& v : g.vertices)
        out += "    <circle cx=\"" + num(px(v.real())) + "\" cy=\"" + num(py(v.imag())) + "\" r=\"" +
               num(spec.vertex_radius) + "\"/>\n";
    out += "  </g>\n</svg>\n";
    return out;
}

std::string to_string(Figure f) { return "fig" + std::to_string(static_cast<int>(f) + 1); }

Figure parse_figure(const std::string& name) {
    for (int i = 0; i < 6; ++i) {
        const Figure f = static_cast<Figure>(i);
        std::string lower = name;
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
        if (lower == to_string(f)) return f;
    }
    throw Error(ErrorKind::InvalidInput, "unknown figure family '" + name + "' (expected fig1 .. fig6)");
}

std::vector<FigureItem> figure_items(Figure f) {
    std::vector<FigureItem> out;
    switch (f) {
    case Figure::Fig1: {
        // p = a(1 - t) with -2a = zeta_14^s, Im(-2a) >= 0: a = 1/2, a = -1/2, then s = 1..6.
        for (int s : {7, 0, 1, 2, 3, 4, 5, 6}) {
            const Cyclo a = -Cyclo::root(14, s) * Cyclo(Rat(1, 2));
            out.push_back(make_item(cyclo_label(a), a.to_complex(), PolySpec<Cyclo>({a, -a}), 40, 0));
        }
        break;
    }
    case Figure::Fig2: {
        // a(1 - 2t - 2t^2), (3a)^12 = 1, one of each conjugate pair.
        for (int s : {6, 0, 3, 1, 2, 4, 5}) {
            const Cyclo a = Cyclo::root(12, s) * Cyclo(Rat(1, 3));
            out.push_back(make_item(cyclo_label(a), a.to_complex(), PolySpec<Cyclo>({a, Cyclo(-2) * a, Cyclo(-2) * a}),
                                    60, 0));
        }
        break;
    }
    case Figure::Fig3: {
        // m(xi^2 + t + xi t^2) with (3 m xi^2)^7 = 1, i.e. m = xi zeta_7^s / 3, ordered by arg m.
        const Cyclo xi = Cyclo::root(3);
        std::vector<std::pair<double, Cyclo>> ms;
        for (int s = 0; s < 7; ++s) {
            const Cyclo m = xi * Cyclo::root(7, s) * Cyclo(Rat(1, 3));
            double arg = std::arg(m.to_complex());
            if (arg < 0) arg += 2 * M_PI;
            ms.emplace_back(arg, m);
        }
        std::sort(ms.begin(), ms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [arg, m] : ms)
            out.push_back(make_item("m = " + format_cyclo(m, m.order()), m.to_complex(),
                                    PolySpec<Cyclo>({m * xi * xi, m, m * xi}), 50, 0));
        break;
    }
    case Figure::Fig4: out = quad_c_items(14); break;
    case Figure::Fig5: out = quad_c_items(12); break;
    case Figure::Fig6: {
        // d = 3, (4a)^5 = 1, Im(a) >= 0.
        for (int s : {0, 2, 1}) {
            const Cyclo a = Cyclo::root(5, s) * Cyclo(Rat(1, 4));
            out.push_back(make_item(cyclo_label(a), a.to_complex(), prop_d_polynomial(3, a), 60, 0));
        }
        break;
    }
    }
    return out;
}

std::vector<std::filesystem::path> figure_family(Figure f, const std::filesystem::path& out_dir,
                                                 const RenderSpec& spec) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + out_dir.string() + ": " + ec.message());
    std::vector<std::filesystem::path> written;
    const auto items = figure_items(f);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto path = out_dir / (to_string(f) + "_" + std::to_string(i + 1) + ".svg");
        std::ofstream os(path, std::ios::binary);
        os << render_svg(items[i].graph, spec, to_string(f) + ": " + items[i].label);
        os.close();
        if (!os) throw Error(ErrorKind::Io, "cannot write " + path.string());
        written.push_back(path);
    }
    return written;
}

} // namespace rap

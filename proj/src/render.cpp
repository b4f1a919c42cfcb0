#include "ford/render.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "ford/counting.hpp"
#include "ford/geometry.hpp"
#include "ford/sequences.hpp"

namespace ford::render {

namespace {

constexpr double kScale = 1000.0;
constexpr i64 kBackgroundQMax = 64;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string svg_open() {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n"
           "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
}

// y axis flipped: math (x, y) -> svg (1000 x, 1000 - 1000 y)
void append_circle(std::string& out, i64 p, i64 q, const char* cls) {
    double cx = kScale * static_cast<double>(p) / static_cast<double>(q);
    double r = kScale / (2.0 * static_cast<double>(q) * static_cast<double>(q));
    double cy = kScale - r;
    out += "<circle class=\"" + std::string(cls) + "\" cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
           "\" r=\"" + fmt(r) + "\"/>\n";
}

}  // namespace

std::string circles_svg(i64 qmax) {
    if (qmax < 1) throw std::domain_error("circles rendering requires qmax >= 1");
    if (qmax > 512) throw std::length_error("circles rendering capped at q <= 512");
    std::string out = svg_open();
    out += "<g fill=\"none\" stroke=\"#555555\" stroke-width=\"0.8\">\n";
    for (i64 q = 1; q <= qmax; ++q) {
        for (i64 p = (q == 1 ? 0 : 1); p <= q; ++p) {
            if (p > 0 && std::gcd(p, q) != 1) continue;
            append_circle(out, p, q, "circle");
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string line_svg(i64 m) {
    if (m < 1) throw std::domain_error("line rendering requires m >= 1");
    sequences::ExtractionResult seq = sequences::extract_origin(m);

    // Background circles first, then touched ones so highlights stay on top.
    i64 bg_qmax = std::min(m, kBackgroundQMax);
    std::string out = svg_open();
    out += "<g fill=\"none\" stroke=\"#555555\" stroke-width=\"0.8\">\n";
    for (i64 q = 1; q <= bg_qmax; ++q) {
        for (i64 p = (q == 1 ? 0 : 1); p <= q; ++p) {
            if (p > 0 && std::gcd(p, q) != 1) continue;
            if (!geometry::origin_touches(m, p, q)) append_circle(out, p, q, "circle");
        }
    }
    out += "</g>\n";
    out += "<g fill=\"none\" stroke=\"#cc2222\" stroke-width=\"1.2\">\n";
    for (const geometry::Fraction& f : seq.fractions) append_circle(out, f.p, f.q, "touched");
    out += "</g>\n";
    double y1 = kScale - kScale / static_cast<double>(m);
    out += "<line x1=\"0\" y1=\"" + fmt(kScale) + "\" x2=\"" + fmt(kScale) + "\" y2=\"" +
           fmt(y1) + "\" stroke=\"#2266cc\" stroke-width=\"1.5\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string lattice_svg(i64 m) {
    if (m < 2) throw std::domain_error("lattice rendering requires m >= 2");
    sequences::ExtractionResult seq = sequences::extract_origin(m);
    i64 s = counting::s_of(m);

    // p spans [0, s+1] on x, q spans [0, m+1] on y.
    double sx = kScale / static_cast<double>(s + 1);
    double sy = kScale / static_cast<double>(m + 1);
    auto X = [&](double p) { return sx * p; };
    auto Y = [&](double q) { return kScale - sy * q; };

    std::string out = svg_open();
    // q = p boundary.
    double top = std::min(static_cast<double>(s + 1), static_cast<double>(m + 1));
    out += "<line x1=\"" + fmt(X(0)) + "\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(X(top)) +
           "\" y2=\"" + fmt(Y(top)) + "\" stroke=\"#cc2222\" stroke-width=\"1.5\"/>\n";
    // q = m/p curve, sampled at fixed eighth steps from p = s+1 down to m/(m+1).
    out += "<path fill=\"none\" stroke=\"#222222\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\" d=\"";
    bool first = true;
    double p_lo = static_cast<double>(m) / static_cast<double>(m + 1);
    for (double p = static_cast<double>(s + 1); p >= p_lo; p -= 0.125) {
        double q = static_cast<double>(m) / p;
        out += (first ? "M" : " L");
        out += fmt(X(p)) + "," + fmt(Y(q));
        first = false;
    }
    out += "\"/>\n<g fill=\"#2266cc\">\n";
    for (const geometry::Fraction& f : seq.fractions) {
        if (f.p == 0) continue;
        out += "<circle cx=\"" + fmt(X(static_cast<double>(f.p))) + "\" cy=\"" +
               fmt(Y(static_cast<double>(f.q))) + "\" r=\"3\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace ford::render

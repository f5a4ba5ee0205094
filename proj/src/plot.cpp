#include "gsu/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gsu/error.hpp"

namespace gsu {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string tick(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", std::abs(x) < 1e-12 ? 0.0 : x);
    return buf;
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

struct Range {
    double lo, hi;
};

Range padded(double lo, double hi) {
    if (lo == hi) {
        const double pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

}  // namespace

std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options) {
    if (series.empty()) throw ValidationError("plot needs at least one series");
    double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
    for (const auto& s : series) {
        if (s.x.empty()) throw ValidationError("series '" + s.label + "' is empty");
        if (s.x.size() != s.y.size()) throw ValidationError("series '" + s.label + "' has mismatched x and y lengths");
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k]))
                throw ValidationError("series '" + s.label + "' has a non-finite value");
            if (options.logx && !(s.x[k] > 0.0)) throw ValidationError("log x axis needs positive x values");
            const double x = options.logx ? std::log10(s.x[k]) : s.x[k];
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, s.y[k]);
            yhi = std::max(yhi, s.y[k]);
        }
    }
    const Range xr = padded(xlo, xhi), yr = padded(ylo, yhi);
    const double W = options.width, H = options.height;
    const double left = 70, right = 20, top = 40, bottom = 55;
    const double pw = W - left - right, ph = H - top - bottom;
    auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" + num(H) + "\" viewBox=\"0 0 " +
           num(W) + " " + num(H) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(W) + "\" height=\"" + num(H) + "\" fill=\"white\"/>\n";
    if (!options.title.empty())
        out += "<text x=\"" + num(W / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" + escape(options.title) +
               "</text>\n";
    out += "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
    out += "<line x1=\"" + num(left) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(left + pw) + "\" y2=\"" +
           num(top + ph) + "\"/>\n";
    out += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" + num(top + ph) +
           "\"/>\n";
    out += "</g>\n<g class=\"ticks\">\n";
    constexpr int kTicks = 5;
    for (int t = 0; t <= kTicks; ++t) {
        const double fx = xr.lo + (xr.hi - xr.lo) * t / kTicks;
        const double fy = yr.lo + (yr.hi - yr.lo) * t / kTicks;
        const double px = sx(fx), py = sy(fy);
        out += "<line x1=\"" + num(px) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px) + "\" y2=\"" +
               num(top + ph + 5) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(px) + "\" y=\"" + num(top + ph + 18) + "\" text-anchor=\"middle\">" +
               tick(options.logx ? std::pow(10.0, fx) : fx) + "</text>\n";
        out += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(left) + "\" y2=\"" + num(py) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" + tick(fy) + "</text>\n";
    }
    out += "</g>\n";
    if (!options.xlabel.empty())
        out += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(H - 12) + "\" text-anchor=\"middle\">" +
               escape(options.xlabel) + "</text>\n";
    if (!options.ylabel.empty())
        out += "<text x=\"16\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
               num(top + ph / 2) + ")\">" + escape(options.ylabel) + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& ser = series[s];
        const std::string color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
        out += "<g class=\"series\" stroke=\"" + color + "\" fill=\"" + color + "\">\n";
        if (ser.line && ser.x.size() > 1) {
            out += "<polyline fill=\"none\" stroke-width=\"1.5\" points=\"";
            for (std::size_t k = 0; k < ser.x.size(); ++k) {
                const double x = options.logx ? std::log10(ser.x[k]) : ser.x[k];
                out += (k ? " " : "") + num(sx(x)) + "," + num(sy(ser.y[k]));
            }
            out += "\"/>\n";
        }
        if (ser.markers || ser.x.size() == 1 || !ser.line) {
            for (std::size_t k = 0; k < ser.x.size(); ++k) {
                const double x = options.logx ? std::log10(ser.x[k]) : ser.x[k];
                out += "<circle class=\"marker\" cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(ser.y[k])) + "\" r=\"3\"/>\n";
            }
        }
        out += "</g>\n";
    }
    out += "<g class=\"legend\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const std::string color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
        const double y = top + 10 + 16.0 * static_cast<double>(s);
        out += "<g class=\"legend-entry\"><line x1=\"" + num(left + pw - 150) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(left + pw - 130) + "\" y2=\"" + num(y) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/><text x=\"" + num(left + pw - 124) + "\" y=\"" + num(y + 4) + "\">" +
               escape(series[s].label) + "</text></g>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace gsu

#include "seqsearch/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace seqsearch {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string tick_label(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

}  // namespace

void write_svg_plot(std::ostream& out, const std::vector<PlotSeries>& series, const PlotOptions& o) {
    const double left = 70, right = 20, top = 40, bottom = 50;
    const double pw = o.width - left - right;
    const double ph = o.height - top - bottom;

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = 0.0, y_hi = 0.0;
    for (const PlotSeries& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (o.log_x && s.x[i] <= 0.0) continue;
            const double e = i < s.err.size() ? s.err[i] : 0.0;
            x_lo = std::min(x_lo, s.x[i]);
            x_hi = std::max(x_hi, s.x[i]);
            y_lo = std::min(y_lo, s.y[i] - e);
            y_hi = std::max(y_hi, s.y[i] + e);
        }
    }
    if (!std::isfinite(x_lo)) x_lo = 1.0, x_hi = 10.0;
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;

    auto tx = [&](double x) {
        const double f = o.log_x ? (std::log10(x) - std::log10(x_lo)) / (std::log10(x_hi) - std::log10(x_lo))
                                 : (x - x_lo) / (x_hi - x_lo);
        return left + f * pw;
    };
    auto ty = [&](double y) { return top + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\"" << o.height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << o.width / 2 << "\" y=\"20\" text-anchor=\"middle\">" << escape(o.title) << "</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // y ticks
    for (int k = 0; k <= 5; ++k) {
        const double v = y_lo + (y_hi - y_lo) * k / 5.0;
        out << "<line x1=\"" << left - 4 << "\" x2=\"" << left << "\" y1=\"" << ty(v) << "\" y2=\"" << ty(v)
            << "\" stroke=\"black\"/><text x=\"" << left - 6 << "\" y=\"" << ty(v) + 4
            << "\" text-anchor=\"end\">" << tick_label(v) << "</text>\n";
    }
    // x ticks: decades on a log axis, fifths otherwise
    std::vector<double> xt;
    if (o.log_x) {
        for (double d = std::pow(10.0, std::ceil(std::log10(x_lo))); d <= x_hi * (1 + 1e-12); d *= 10.0) xt.push_back(d);
    } else {
        for (int k = 0; k <= 5; ++k) xt.push_back(x_lo + (x_hi - x_lo) * k / 5.0);
    }
    for (double v : xt) {
        out << "<line x1=\"" << tx(v) << "\" x2=\"" << tx(v) << "\" y1=\"" << top + ph << "\" y2=\"" << top + ph + 4
            << "\" stroke=\"black\"/><text x=\"" << tx(v) << "\" y=\"" << top + ph + 18
            << "\" text-anchor=\"middle\">" << tick_label(v) << "</text>\n";
    }
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << o.height - 10 << "\" text-anchor=\"middle\">"
        << escape(o.x_label) << (o.log_x ? " (log scale)" : "") << "</text>\n";
    out << "<text transform=\"translate(16," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
        << escape(o.y_label) << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const PlotSeries& s = series[si];
        const char* colour = kPalette[si % std::size(kPalette)];
        std::ostringstream line, band_hi;
        bool any = false;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (o.log_x && s.x[i] <= 0.0) continue;
            const double e = i < s.err.size() ? s.err[i] : 0.0;
            line << (any ? " " : "") << tx(s.x[i]) << ',' << ty(s.y[i]);
            band_hi << (any ? " " : "") << tx(s.x[i]) << ',' << ty(s.y[i] + e);
            any = true;
        }
        if (!any) continue;
        if (!s.err.empty()) {
            std::ostringstream poly;
            poly << band_hi.str();
            for (std::size_t i = s.x.size(); i-- > 0;) {
                if (o.log_x && s.x[i] <= 0.0) continue;
                const double e = i < s.err.size() ? s.err[i] : 0.0;
                poly << ' ' << tx(s.x[i]) << ',' << ty(s.y[i] - e);
            }
            out << "<polygon points=\"" << poly.str() << "\" fill=\"" << colour << "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
        }
        out << "<polyline points=\"" << line.str() << "\" fill=\"none\" stroke=\"" << colour
            << "\" stroke-width=\"1.5\"/>\n";
        out << "<text x=\"" << left + 10 << "\" y=\"" << top + 16 + 16 * static_cast<double>(si) << "\" fill=\"" << colour
            << "\">" << escape(s.label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace seqsearch

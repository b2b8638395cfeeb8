#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqsearch {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> err;  // optional half-width band, same length as y
};

struct PlotOptions {
    std::string title;
    std::string x_label = "budget";
    std::string y_label = "regret proxy";
    bool log_x = false;
    int width = 720;
    int height = 480;
};

// Static line chart; non-positive x values are dropped on a log axis.
void write_svg_plot(std::ostream& out, const std::vector<PlotSeries>& series, const PlotOptions& options);

}  // namespace seqsearch

#pragma once

#include <string>
#include <vector>

namespace gsu {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool markers = false;  // always drawn for single-point series
    bool line = true;
};

struct PlotOptions {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool logx = false;
    int width = 640;
    int height = 420;
};

// Line/scatter chart with axes and a legend. Byte-identical output for equal input.
// Throws ValidationError on an empty series list, an empty series, mismatched
// lengths, non-finite values, or nonpositive x on a log axis.
std::string render_svg(const std::vector<PlotSeries>& series, const PlotOptions& options = {});

}  // namespace gsu

#ifndef KPCA_LAB_SVG_HPP
#define KPCA_LAB_SVG_HPP

#include "common.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace kpca_lab::svg {

/// Fixed 3-decimal formatting keeps documents byte-stable across runs.
inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

inline std::string header(int width, int height) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    return os.str();
}

inline std::string footer() { return "</svg>\n"; }

inline const char* palette(std::size_t i) {
    static constexpr const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                             "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return colors[i % (sizeof colors / sizeof colors[0])];
}

/// Scatter plot of the first two columns of `points`, one colour per distinct
/// label (all one colour when `labels` is empty).
inline std::string scatter(const Matrix& points, const std::vector<int>& labels = {}, const std::string& title = {}) {
    require(points.cols() >= 2, "scatter needs at least two columns");
    require(labels.empty() || static_cast<Index>(labels.size()) == points.rows(), "scatter: label count mismatch");
    constexpr int size = 400;
    constexpr double margin = 24.0;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (points.rows() > 0) {
        xmin = points.col(0).minCoeff();
        xmax = points.col(0).maxCoeff();
        ymin = points.col(1).minCoeff();
        ymax = points.col(1).maxCoeff();
    }
    const double xspan = xmax > xmin ? xmax - xmin : 1.0;
    const double yspan = ymax > ymin ? ymax - ymin : 1.0;

    std::map<int, std::size_t> colour_of;
    for (int l : labels) colour_of.emplace(l, 0);
    std::size_t next = 0;
    for (auto& [label, idx] : colour_of) idx = next++;

    std::ostringstream os;
    os << header(size, size);
    if (!title.empty()) os << "<title>" << title << "</title>\n";
    for (Index i = 0; i < points.rows(); ++i) {
        const double px = margin + (points(i, 0) - xmin) / xspan * (size - 2 * margin);
        const double py = size - margin - (points(i, 1) - ymin) / yspan * (size - 2 * margin);
        const char* fill = labels.empty() ? palette(0) : palette(colour_of[labels[static_cast<std::size_t>(i)]]);
        os << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"2.5\" fill=\"" << fill << "\"/>\n";
    }
    os << footer();
    return os.str();
}

} // namespace kpca_lab::svg

#endif

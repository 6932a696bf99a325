#ifndef KPCA_LAB_FACE_RENDER_HPP
#define KPCA_LAB_FACE_RENDER_HPP

#include "common.hpp"
#include "shapes.hpp"
#include "svg.hpp"

#include <Eigen/QR>

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace kpca_lab {

/// Which landmarks (0-based) draw which facial part.
struct LandmarkRoleMap {
    std::vector<Index> right_brow;
    std::vector<Index> left_brow;
    std::vector<Index> right_eye;
    std::vector<Index> left_eye;
    std::vector<Index> eyeballs;
    std::vector<Index> nose;
    std::vector<Index> mouth; // quadrilateral, 4 points in drawing order
    std::vector<Index> contour;

    template <typename Self>
    static auto groups_of(Self& self) {
        using Group = std::conditional_t<std::is_const_v<Self>, const std::vector<Index>, std::vector<Index>>;
        return std::array<std::pair<const char*, Group*>, 8>{{{"right_brow", &self.right_brow},
                                                             {"left_brow", &self.left_brow},
                                                             {"right_eye", &self.right_eye},
                                                             {"left_eye", &self.left_eye},
                                                             {"eyeballs", &self.eyeballs},
                                                             {"nose", &self.nose},
                                                             {"mouth", &self.mouth},
                                                             {"contour", &self.contour}}};
    }

    auto groups() { return groups_of(*this); }
    auto groups() const { return groups_of(*this); }
};

/// Best-effort convention for the 20-point BioID annotation:
///  0/1 pupils, 2/3 mouth corners, 4-5 right brow, 6-7 left brow, 8/13 temples,
///  9-10 right eye corners, 11-12 left eye corners, 14 nose tip, 15/16 nostrils,
///  17/18 upper/lower lip centre, 19 chin.
inline LandmarkRoleMap default_bioid_roles() {
    LandmarkRoleMap r;
    r.right_brow = {4, 5};
    r.left_brow = {6, 7};
    r.right_eye = {9, 10};
    r.left_eye = {11, 12};
    r.eyeballs = {0, 1};
    r.nose = {15, 14, 16};
    r.mouth = {2, 17, 3, 18};
    r.contour = {8, 19, 13};
    return r;
}

/// Checks indices against a shape with `points` landmarks.
inline void validate_roles(const LandmarkRoleMap& roles, Index points) {
    std::set<Index> seen;
    for (const auto& [name, group] : roles.groups()) {
        for (Index i : *group) {
            require(i >= 0 && i < points, std::string("role group '") + name + "' index " + std::to_string(i) +
                                              " outside [0, " + std::to_string(points) + ")");
            require(seen.insert(i).second,
                    std::string("landmark ") + std::to_string(i) + " appears in more than one role group");
        }
    }
    require(roles.contour.size() >= 3, "contour group needs at least 3 points for the parabola fit");
    require(roles.mouth.empty() || roles.mouth.size() == 4, "mouth group must hold exactly 4 points");
}

/// Parses "group = i, j, k" lines. Blank lines and lines starting with '#'
/// are skipped; groups not mentioned stay empty.
inline LandmarkRoleMap parse_role_map(std::istream& in) {
    LandmarkRoleMap roles;
    std::string line;
    std::size_t line_no = 0;
    std::set<std::string> assigned;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'group = indices'", line_no);
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);

        std::vector<Index>* target = nullptr;
        for (auto [name, group] : roles.groups())
            if (key == name) target = group;
        if (!target) throw ParseError("unknown role group '" + key + "'", line_no);
        if (!assigned.insert(key).second) throw ParseError("role group '" + key + "' given twice", line_no);

        std::stringstream rest(line.substr(eq + 1));
        std::string cell;
        while (std::getline(rest, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t\r"));
            cell.erase(cell.find_last_not_of(" \t\r") + 1);
            long v = 0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || v < 0)
                throw ParseError("bad landmark index '" + cell + "'", line_no);
            target->push_back(v);
        }
    }
    return roles;
}

inline LandmarkRoleMap read_role_map(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_role_map(in);
}

/// Least-squares y = a x^2 + b x + c; returns {a, b, c}.
inline std::array<double, 3> fit_parabola(const std::vector<std::array<double, 2>>& pts) {
    require(pts.size() >= 3, "parabola fit needs at least 3 points");
    Matrix a(static_cast<Index>(pts.size()), 3);
    Vector y(static_cast<Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto r = static_cast<Index>(i);
        a(r, 0) = pts[i][0] * pts[i][0];
        a(r, 1) = pts[i][0];
        a(r, 2) = 1.0;
        y(r) = pts[i][1];
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(a);
    if (qr.rank() < 3) throw InputError("parabola fit is underdetermined (fewer than 3 distinct x values)");
    const Vector coef = qr.solve(y);
    return {coef(0), coef(1), coef(2)};
}

/// 400 x 400 SVG drawing of a shape whose coordinates lie in [0, 1]^2.
inline std::string render_face_svg(const Shape& shape, const LandmarkRoleMap& roles) {
    validate_roles(roles, shape.points());
    constexpr int canvas = 400;
    auto px = [&](double v) { return svg::num(v * canvas); };
    auto point = [&](Index j) { return px(shape.x(j)) + "," + px(shape.y(j)); };

    std::ostringstream os;
    os << svg::header(canvas, canvas);
    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    auto polyline = [&](const char* id, const std::vector<Index>& group) {
        if (group.size() < 2) return;
        os << "<polyline id=\"" << id << "\" points=\"";
        for (std::size_t i = 0; i < group.size(); ++i) os << (i ? " " : "") << point(group[i]);
        os << "\"/>\n";
    };
    polyline("right_brow", roles.right_brow);
    polyline("left_brow", roles.left_brow);
    polyline("right_eye", roles.right_eye);
    polyline("left_eye", roles.left_eye);
    polyline("nose", roles.nose);
    for (Index j : roles.eyeballs)
        os << "<circle cx=\"" << px(shape.x(j)) << "\" cy=\"" << px(shape.y(j)) << "\" r=\"6\"/>\n";
    if (!roles.mouth.empty()) {
        os << "<polygon id=\"mouth\" points=\"";
        for (std::size_t i = 0; i < roles.mouth.size(); ++i) os << (i ? " " : "") << point(roles.mouth[i]);
        os << "\"/>\n";
    }

    std::vector<std::array<double, 2>> contour;
    double xlo = shape.x(roles.contour.front()), xhi = xlo;
    for (Index j : roles.contour) {
        contour.push_back({shape.x(j), shape.y(j)});
        xlo = std::min(xlo, shape.x(j));
        xhi = std::max(xhi, shape.x(j));
    }
    const auto [a, b, c] = fit_parabola(contour);
    constexpr int samples = 48;
    os << "<path id=\"contour\" d=\"";
    for (int s = 0; s <= samples; ++s) {
        const double x = xlo + (xhi - xlo) * s / samples;
        const double y = (a * x + b) * x + c;
        os << (s ? " L" : "M") << px(x) << ',' << px(y);
    }
    os << "\"/>\n</g>\n";
    os << svg::footer();
    return os.str();
}

} // namespace kpca_lab

#endif

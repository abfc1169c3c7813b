#include "demroots/svg.hpp"

#include <algorithm>
#include <sstream>

namespace demroots {

namespace {

constexpr int kScale = 28;
constexpr int kMargin = 24;

struct Canvas {
    int bound;
    int size() const { return 2 * bound * kScale + 2 * kMargin; }
    double x(const Rat& v) const {
        return kMargin + (static_cast<double>(v) + bound) * kScale;
    }
    double y(const Rat& v) const {
        return kMargin + (bound - static_cast<double>(v)) * kScale;
    }
};

} // namespace

std::string roots_svg(const Cone& c, const std::vector<DemazureRoot>& roots, int bound) {
    if (c.rank() != 2)
        throw DomainError("bad_rank", "the root diagram is drawn for rank-2 cones only");
    Canvas cv{bound};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cv.size() << "\" height=\""
        << cv.size() << "\" viewBox=\"0 0 " << cv.size() << " " << cv.size() << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Lattice dots.
    for (int x = -bound; x <= bound; ++x)
        for (int y = -bound; y <= bound; ++y)
            svg << "  <circle cx=\"" << cv.x(x) << "\" cy=\"" << cv.y(y)
                << "\" r=\"1\" fill=\"#d0d0d0\"/>\n";

    // Axes.
    svg << "  <line x1=\"" << cv.x(-bound) << "\" y1=\"" << cv.y(0) << "\" x2=\"" << cv.x(bound)
        << "\" y2=\"" << cv.y(0) << "\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(-bound) << "\" x2=\"" << cv.x(0)
        << "\" y2=\"" << cv.y(bound) << "\" stroke=\"#808080\" stroke-width=\"1\"/>\n";

    // Boundary of the weight cone: its generators are the facet normals of
    // the cone in N, drawn from the origin to the edge of the box.
    for (const auto& gen : c.facet_normals()) {
        Int mx = std::max(boost::multiprecision::abs(gen[0]), boost::multiprecision::abs(gen[1]));
        Rat fx = Rat(gen[0] * bound, mx);
        Rat fy = Rat(gen[1] * bound, mx);
        svg << "  <line x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(0) << "\" x2=\"" << cv.x(fx)
            << "\" y2=\"" << cv.y(fy) << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
    }

    // Roots, one marker style per distinguished ray.
    for (const auto& root : roots) {
        size_t ray_index = 0;
        for (size_t i = 0; i < c.rays().size(); ++i)
            if (c.rays()[i] == root.ray) ray_index = i;
        svg << "  <circle cx=\"" << cv.x(root.e[0]) << "\" cy=\"" << cv.y(root.e[1])
            << "\" r=\"4\"";
        if (ray_index == 0)
            svg << " fill=\"black\"";
        else if (ray_index == 1)
            svg << " fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"";
        else
            svg << " fill=\"#909090\"";
        svg << "><title>e=" << root.e.str() << " ray=" << root.ray.str() << "</title></circle>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace demroots

#ifndef DEMROOTS_SVG_HPP
#define DEMROOTS_SVG_HPP

#include <string>
#include <vector>

#include "demroots/demazure.hpp"

namespace demroots {

// Rank-2 root diagram in the style of the figures: the weight cone drawn
// with thick boundary rays, lattice dots, and one marker style per
// distinguished ray (filled for the first ray, hollow for the second).
std::string roots_svg(const Cone& c, const std::vector<DemazureRoot>& roots, int bound);

} // namespace demroots

#endif

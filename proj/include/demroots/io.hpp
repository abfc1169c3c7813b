#ifndef DEMROOTS_IO_HPP
#define DEMROOTS_IO_HPP

#include <string>

#include <json.hpp>

#include "demroots/lnd.hpp"
#include "demroots/restriction.hpp"
#include "demroots/surface.hpp"

namespace demroots::io {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input. Rationals are
// "p" or "p/q" strings (numbers also accepted).
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vector_to_json(const LatticeVector& v);
LatticeVector vector_from_json(const Json& j);

// {"rank": k, "rays": [[...], ...]}
Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

// {"normal": [...]} or {"basis": [[...], ...]}
Json hyperplane_to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);

// {"rank": n, "basis": [[...], ...]} or {"rank": n, "normal": [...]}
Json subtorus_to_json(const SubtorusRestriction& s);
SubtorusRestriction subtorus_from_json(const Json& j);

// {"terms": [{"coeff": "p/q", "exponent": [...]}, ...]}
Json element_to_json(const AlgebraElement& f);
AlgebraElement element_from_json(const Json& j);

// Derivation descriptors; the four kinds:
//   {"kind": "root_lnd", "cone": C, "e": [...], "scalar": "1"}
//   {"kind": "nhrv", "cone": C, "e1": [...], "e2": [...], "m_t": [...],
//    "alpha": "...", "beta": "..."}
//   {"kind": "monomial_table", "rank": d, "images": [element, ...],
//    "degree": [...]?}    (optional degree claim, validated)
//   {"kind": "sum_homogeneous", "cone": C, "parts":
//    [{"degree": [...], "weights": [...], "scalar": "..."}, ...]}
Derivation derivation_from_json(const Json& j);

Json root_to_json(const DemazureRoot& r);
Json roots_to_json(const Cone& c, const std::vector<DemazureRoot>& roots, int bound);
Json fiber_report_to_json(const FiberReport& f);
Json classify_report_to_json(const ClassifyReport& rep);
Json surface_report_to_json(const SurfaceData& s, const SurfaceCase& sc, int bound,
                            bool with_family);
Json cremona_to_json(int n, int bound, const std::vector<CremonaRootVector>& rv);
Json decomposition_to_json(const HomogeneousDecomposition& dec);
Json verdict_to_json(const NilpotencyVerdict& v);

Json load_json_file(const std::string& path);

} // namespace demroots::io

#endif

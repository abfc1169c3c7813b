#include "demroots/io.hpp"

#include <fstream>
#include <limits>

namespace demroots::io {

namespace {

[[noreturn]] void bad_schema(const std::string& what) {
    throw DomainError("schema", "malformed input: " + what);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad_schema(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return Json(static_cast<long long>(v));
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad_schema("'" + j.get<std::string>() + "' is not an integer");
        }
    }
    bad_schema("expected an integer");
}

Json rat_to_json(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return Json(num.str());
    return Json(num.str() + "/" + den.str());
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            auto slash = s.find('/');
            if (slash == std::string::npos) return Rat(Int(s));
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) bad_schema("zero denominator in '" + s + "'");
            return Rat(num, den);
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            bad_schema("'" + s + "' is not a rational");
        }
    }
    bad_schema("expected a rational");
}

Json vector_to_json(const LatticeVector& v) {
    Json out = Json::array();
    for (int i = 0; i < v.rank(); ++i) out.push_back(int_to_json(v[i]));
    return out;
}

LatticeVector vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad_schema("expected a nonempty coordinate array");
    std::vector<Int> coords;
    for (const auto& c : j) coords.push_back(int_from_json(c));
    return LatticeVector(std::move(coords));
}

Json cone_to_json(const Cone& c) {
    Json out;
    out["rank"] = c.rank();
    Json rays = Json::array();
    for (const auto& r : c.rays()) rays.push_back(vector_to_json(r));
    out["rays"] = rays;
    Json facets = Json::array();
    for (const auto& h : c.facet_normals()) facets.push_back(vector_to_json(h));
    out["facet_normals"] = facets;
    return out;
}

Cone cone_from_json(const Json& j) {
    int rank = field(j, "rank").get<int>();
    std::vector<LatticeVector> rays;
    for (const auto& r : field(j, "rays")) rays.push_back(vector_from_json(r));
    return Cone::from_generators(rank, std::move(rays));
}

Json hyperplane_to_json(const Hyperplane& h) {
    Json out;
    out["normal"] = vector_to_json(h.normal);
    if (h.basis) {
        Json basis = Json::array();
        for (const auto& b : *h.basis) basis.push_back(vector_to_json(b));
        out["basis"] = basis;
    }
    return out;
}

Hyperplane hyperplane_from_json(const Json& j) {
    if (j.contains("basis")) {
        std::vector<LatticeVector> basis;
        for (const auto& b : j.at("basis")) basis.push_back(vector_from_json(b));
        return Hyperplane::from_basis(std::move(basis));
    }
    if (j.contains("normal")) return Hyperplane::from_normal(vector_from_json(j.at("normal")));
    bad_schema("hyperplane needs 'normal' or 'basis'");
}

Json subtorus_to_json(const SubtorusRestriction& s) {
    Json out;
    out["rank"] = s.ambient_rank();
    Json basis = Json::array();
    for (const auto& b : s.basis()) basis.push_back(vector_to_json(b));
    out["basis"] = basis;
    if (s.kernel_char()) out["kernel_char"] = vector_to_json(*s.kernel_char());
    return out;
}

SubtorusRestriction subtorus_from_json(const Json& j) {
    if (j.contains("basis")) {
        std::vector<LatticeVector> basis;
        for (const auto& b : j.at("basis")) basis.push_back(vector_from_json(b));
        if (basis.empty()) bad_schema("empty subtorus basis");
        int rank = j.contains("rank") ? j.at("rank").get<int>() : basis[0].rank();
        return SubtorusRestriction::from_basis(rank, std::move(basis));
    }
    if (j.contains("normal"))
        return SubtorusRestriction::from_hyperplane(
            Hyperplane::from_normal(vector_from_json(j.at("normal"))));
    bad_schema("subtorus needs 'basis' or 'normal'");
}

Json element_to_json(const AlgebraElement& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json t;
        t["coeff"] = rat_to_json(c);
        t["exponent"] = vector_to_json(m);
        terms.push_back(t);
    }
    return Json{{"terms", terms}};
}

AlgebraElement element_from_json(const Json& j) {
    AlgebraElement out;
    for (const auto& t : field(j, "terms"))
        out.add_term(vector_from_json(field(t, "exponent")), rat_from_json(field(t, "coeff")));
    return out;
}

Derivation derivation_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "root_lnd") {
        Cone c = cone_from_json(field(j, "cone"));
        LatticeVector e = vector_from_json(field(j, "e"));
        auto ray = is_root(c, e);
        if (!ray) throw DomainError("not_a_root", e.str() + " is not a Demazure root");
        Rat scalar = j.contains("scalar") ? rat_from_json(j.at("scalar")) : Rat(1);
        return root_lnd(c, {e, *ray}, scalar);
    }
    if (kind == "nhrv") {
        Cone c = cone_from_json(field(j, "cone"));
        LatticeVector e1 = vector_from_json(field(j, "e1"));
        LatticeVector e2 = vector_from_json(field(j, "e2"));
        auto r1 = is_root(c, e1);
        auto r2 = is_root(c, e2);
        if (!r1) throw DomainError("not_a_root", e1.str() + " is not a Demazure root");
        if (!r2) throw DomainError("not_a_root", e2.str() + " is not a Demazure root");
        return nhrv_derivation(c, {e1, *r1}, {e2, *r2}, vector_from_json(field(j, "m_t")),
                               rat_from_json(field(j, "alpha")), rat_from_json(field(j, "beta")));
    }
    if (kind == "monomial_table") {
        int rank = field(j, "rank").get<int>();
        std::vector<AlgebraElement> images;
        for (const auto& img : field(j, "images")) images.push_back(element_from_json(img));
        Derivation d = monomial_table_derivation(rank, images);
        if (j.contains("degree")) {
            LatticeVector claimed = vector_from_json(j.at("degree"));
            for (int i = 0; i < rank; ++i)
                for (const auto& [m, c] : images[static_cast<size_t>(i)].terms())
                    if (m - LatticeVector::unit(rank, i) != claimed)
                        throw DomainError("inconsistent_degree",
                                          "image term chi^" + m.str() + " of variable " +
                                              std::to_string(i + 1) +
                                              " contradicts the declared degree " +
                                              claimed.str());
        }
        return d;
    }
    if (kind == "sum_homogeneous") {
        Cone c = cone_from_json(field(j, "cone"));
        std::vector<Derivation> parts;
        for (const auto& p : field(j, "parts")) {
            LatticeVector degree = vector_from_json(field(p, "degree"));
            LatticeVector w = vector_from_json(field(p, "weights"));
            Rat scalar = p.contains("scalar") ? rat_from_json(p.at("scalar")) : Rat(1);
            parts.push_back(homogeneous_monomial_derivation(c, w, degree, scalar));
        }
        return sum(parts);
    }
    bad_schema("unknown derivation kind '" + kind + "'");
}

Json root_to_json(const DemazureRoot& r) {
    Json out;
    out["e"] = vector_to_json(r.e);
    out["ray"] = vector_to_json(r.ray);
    return out;
}

Json roots_to_json(const Cone& c, const std::vector<DemazureRoot>& roots, int bound) {
    Json out;
    out["cone"] = cone_to_json(c);
    out["bound"] = bound;
    Json by_ray = Json::array();
    for (const auto& ray : c.rays()) {
        Json group;
        group["ray"] = vector_to_json(ray);
        Json list = Json::array();
        for (const auto& r : roots)
            if (r.ray == ray) list.push_back(vector_to_json(r.e));
        group["roots"] = list;
        by_ray.push_back(group);
    }
    out["roots_by_ray"] = by_ray;
    out["count"] = roots.size();
    return out;
}

Json fiber_report_to_json(const FiberReport& f) {
    Json out;
    out["t_root"] = vector_to_json(f.t_root);
    out["cardinality_class"] = to_string(f.cardinality_class);
    if (f.cardinality_class == CardinalityClass::Exactly ||
        f.cardinality_class == CardinalityClass::ExactlyOne)
        out["cardinality"] = int_to_json(f.cardinality);
    out["root_space"] = to_string(f.dim_class);
    if (f.dim_class == RootSpaceDim::Dim) out["root_space_dim"] = int_to_json(f.dim_value);
    Json pre = Json::array();
    for (const auto& p : f.preimages) pre.push_back(root_to_json(p));
    out["preimages_within_bound"] = pre;
    if (f.witness) {
        Json w;
        w["base"] = vector_to_json(f.witness->base);
        w["ray"] = vector_to_json(f.witness->ray);
        w["step"] = vector_to_json(f.witness->step);
        out["progression_witness"] = w;
    }
    Json ivs = Json::array();
    for (const auto& iv : f.intervals) {
        Json row;
        row["ray"] = vector_to_json(iv.ray);
        row["ray_in_hyperplane"] = iv.ray_in_hyperplane;
        row["empty"] = iv.empty;
        if (!iv.empty) {
            if (iv.lower_bounded) row["lambda_min"] = int_to_json(iv.lo);
            if (iv.upper_bounded) row["lambda_max"] = int_to_json(iv.hi);
        }
        ivs.push_back(row);
    }
    out["lambda_intervals"] = ivs;
    out["unique_lift_t_homogeneous"] = f.unique_lift_t_homogeneous;
    return out;
}

Json classify_report_to_json(const ClassifyReport& rep) {
    Json out;
    out["position"] = to_string(rep.position.kind);
    if (rep.position.kind == PositionKind::Face) out["face_dim"] = rep.position.face_dim;
    if (!rep.position.rays_in_hyperplane.empty()) {
        Json rr = Json::array();
        for (const auto& r : rep.position.rays_in_hyperplane) rr.push_back(vector_to_json(r));
        out["rays_in_hyperplane"] = rr;
    }
    Json rays = Json::array();
    for (const auto& info : rep.ray_info) {
        Json row;
        row["ray"] = vector_to_json(info.ray);
        row["in_hyperplane"] = info.in_hyperplane;
        row["injectivity"] = to_string(info.injectivity);
        rays.push_back(row);
    }
    out["rays"] = rays;
    out["images_pairwise_disjoint"] = rep.images_pairwise_disjoint;
    out["all_fibers_exactly_one"] = rep.all_fibers_exactly_one;
    Json fibers = Json::array();
    for (const auto& f : rep.fibers) fibers.push_back(fiber_report_to_json(f));
    out["fibers"] = fibers;
    return out;
}

Json surface_report_to_json(const SurfaceData& s, const SurfaceCase& sc, int bound,
                            bool with_family) {
    Json out;
    out["a"] = int_to_json(s.a());
    out["b"] = int_to_json(s.b());
    out["r"] = int_to_json(s.r());
    out["q"] = int_to_json(s.q());
    out["case"] = to_string(sc.tag);
    if (sc.tag == SurfaceCaseTag::Case2) out["ray_index"] = sc.ray_index;
    auto row_json = [](const RowAnswer& row) {
        Json r;
        r["root_vectors"] = row.root_vectors;
        r["lifts"] = row.lift_count;
        r["all_t_homogeneous"] = row.all_t_homogeneous;
        return r;
    };
    out["generic_row"] = row_json(sc.generic_row);
    if (sc.special_row) {
        out["special_row"] = row_json(*sc.special_row);
        out["special_row_label"] = sc.special_row_label;
    }
    if (s.line_meets_interior()) {
        out["d"] = int_to_json(s.d());
        LambdaSet l = lambda_members(s, bound);
        Json lj;
        lj["empty"] = l.empty;
        lj["gcd_qd"] = int_to_json(l.gcd_qd);
        lj["description"] = sc.lambda_description;
        if (!l.empty) {
            lj["first"] = int_to_json(*l.first);
            lj["step"] = int_to_json(l.step);
            Json mem = Json::array();
            for (const auto& t : l.members) mem.push_back(int_to_json(t));
            lj["members_within_bound"] = mem;
        }
        out["lambda"] = lj;
        AhInvariants inv = ah_invariants(s);
        Json divisor;
        divisor["p1"] = rat_to_json(inv.p1);
        divisor["p2"] = rat_to_json(inv.p2);
        divisor["p1_integral"] = inv.p1_integral;
        divisor["p2_integral"] = inv.p2_integral;
        divisor["u"] = int_to_json(inv.uv.u);
        divisor["v"] = int_to_json(inv.uv.v);
        out["divisor"] = divisor;
        if (with_family && sc.tag == SurfaceCaseTag::Case33 && !l.empty && !l.members.empty()) {
            Json fam = Json::array();
            for (const auto& t : l.members) {
                auto [f1, f2] = lambda_lifts(s, t);
                Json d;
                d["kind"] = "nhrv";
                d["cone"] = cone_to_json(s.cone());
                if (s.q() == 1) {
                    d["e1"] = vector_to_json(f1.e);
                    d["e2"] = vector_to_json(f2.e);
                    d["m_t"] = vector_to_json(LatticeVector{std::vector<Int>{Int(-1), s.r()}});
                } else {
                    d["e1"] = vector_to_json(f2.e);
                    d["e2"] = vector_to_json(f1.e);
                    d["m_t"] = vector_to_json(LatticeVector{std::vector<Int>{s.q(), -s.r()}});
                }
                d["t_root"] = int_to_json(t);
                d["alpha"] = "free parameter";
                d["beta"] = "free parameter";
                fam.push_back(d);
            }
            out["family"] = fam;
        }
    }
    return out;
}

Json cremona_to_json(int n, int bound, const std::vector<CremonaRootVector>& rv) {
    Json out;
    out["n"] = n;
    out["bound"] = bound;
    Json list = Json::array();
    for (const auto& r : rv) {
        Json row;
        row["index"] = r.index;
        row["alpha"] = vector_to_json(r.alpha);
        row["character_exponents"] = vector_to_json(r.character_exponents);
        row["t_root"] = vector_to_json(r.t_root);
        row["derivation"] = r.derivation_text;
        list.push_back(row);
    }
    out["root_vectors"] = list;
    out["count"] = rv.size();
    return out;
}

Json verdict_to_json(const NilpotencyVerdict& v) {
    Json out;
    out["nilpotent"] = v.nilpotent;
    out[v.nilpotent ? "power" : "max_iter"] = v.power;
    if (!v.nilpotent) out["note"] = "evidence only: no vanishing within max_iter";
    return out;
}

Json decomposition_to_json(const HomogeneousDecomposition& dec) {
    Json out;
    Json degrees = Json::array();
    for (const auto& [e, piece] : dec.pieces) degrees.push_back(vector_to_json(e));
    out["degrees"] = degrees;
    Json verts = Json::array();
    for (const auto& v : dec.newton_polytope) verts.push_back(vector_to_json(v));
    out["newton_polytope_vertices"] = verts;
    Json verdicts = Json::array();
    for (const auto& [e, v] : dec.vertex_verdicts) {
        Json row;
        row["degree"] = vector_to_json(e);
        row["oracle"] = verdict_to_json(v);
        verdicts.push_back(row);
    }
    out["vertex_verdicts"] = verdicts;
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("io", "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DomainError("schema", "cannot parse '" + path + "': " + e.what());
    }
    return j;
}

} // namespace demroots::io

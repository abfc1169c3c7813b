#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "demroots/io.hpp"
#include "demroots/suites.hpp"
#include "demroots/svg.hpp"

using namespace demroots;
using demroots::io::Json;

namespace {

LatticeVector parse_vector_arg(const std::string& arg) {
    std::vector<Int> coords;
    std::string cur;
    for (char ch : arg + ",") {
        if (ch == ',') {
            if (cur.empty()) throw DomainError("schema", "empty coordinate in '" + arg + "'");
            coords.emplace_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (coords.empty()) throw DomainError("schema", "no coordinates in '" + arg + "'");
    return LatticeVector(std::move(coords));
}

void validate_thread_override() {
    const char* env = std::getenv("DEMROOTS_THREADS");
    if (!env) return;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw DomainError("bad_env", "DEMROOTS_THREADS must be a positive integer");
    // Everything here is desk scale; the override is accepted for
    // compatibility but this build runs single-threaded.
}

void print_roots_text(const Cone& c, const std::vector<DemazureRoot>& roots, int bound) {
    std::cout << "cone rays:";
    for (const auto& r : c.rays()) std::cout << " " << r.str();
    std::cout << "\nroots with sup-norm <= " << bound << ":\n";
    for (const auto& ray : c.rays()) {
        std::cout << "  ray " << ray.str() << ":";
        for (const auto& r : roots)
            if (r.ray == ray) std::cout << " " << r.e.str();
        std::cout << "\n";
    }
    std::cout << "total: " << roots.size() << "\n";
}

void print_fiber_text(const FiberReport& f) {
    std::cout << "t-root " << f.t_root.str() << ": " << to_string(f.cardinality_class);
    if (f.cardinality_class == CardinalityClass::Exactly ||
        f.cardinality_class == CardinalityClass::ExactlyOne)
        std::cout << " (" << f.cardinality << ")";
    std::cout << ", root space " << to_string(f.dim_class);
    if (f.dim_class == RootSpaceDim::Dim) std::cout << " (" << f.dim_value << ")";
    std::cout << "\n  lifts in box:";
    for (const auto& p : f.preimages) std::cout << " " << p.e.str() << "@" << p.ray.str();
    if (f.witness)
        std::cout << "\n  progression: " << f.witness->base.str() << " + k*"
                  << f.witness->step.str();
    std::cout << "\n";
}

int run_app(int argc, char** argv) {
    CLI::App app{"Demazure roots of affine toric varieties, their restriction along a subtorus, "
                 "and the associated locally nilpotent derivations"};
    app.require_subcommand(1);

    std::string cone_path, subtorus_path, t_root_arg, derivation_path, element_path;
    std::string probes_path, generators_path, suite_name = "all";
    int bound = 8, max_iter = 50, cremona_n = 2;
    long long sa = 0, sb = 1, sr = 1, sq = 1;
    unsigned long long seed = 0x3d90;
    bool as_json = false, as_svg = false, with_family = false;

    auto* roots_cmd = app.add_subcommand("roots", "enumerate Demazure roots inside a box");
    roots_cmd->add_option("--cone", cone_path, "cone JSON file")->required();
    roots_cmd->add_option("--bound", bound, "sup-norm box bound")->required();
    roots_cmd->add_flag("--json", as_json, "JSON output");
    roots_cmd->add_flag("--svg", as_svg, "SVG root diagram (rank 2)");
    roots_cmd->callback([&] {
        Cone c = io::cone_from_json(io::load_json_file(cone_path));
        auto roots = roots_within(c, bound);
        if (as_svg)
            std::cout << roots_svg(c, roots, bound);
        else if (as_json)
            std::cout << io::roots_to_json(c, roots, bound).dump(2) << "\n";
        else
            print_roots_text(c, roots, bound);
    });

    auto* classify_cmd =
        app.add_subcommand("classify", "classify the restriction of roots along a subtorus");
    classify_cmd->add_option("--cone", cone_path, "cone JSON file")->required();
    classify_cmd->add_option("--subtorus", subtorus_path, "subtorus JSON file")->required();
    classify_cmd->add_option("--bound", bound, "sup-norm box bound")->required();
    classify_cmd->add_flag("--json", as_json, "JSON output");
    classify_cmd->callback([&] {
        Cone c = io::cone_from_json(io::load_json_file(cone_path));
        SubtorusRestriction s = io::subtorus_from_json(io::load_json_file(subtorus_path));
        ClassifyReport rep = classify(s, c, bound);
        if (as_json) {
            std::cout << io::classify_report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "position: " << to_string(rep.position.kind) << "\n";
            std::cout << "all fibers exactly one: " << (rep.all_fibers_exactly_one ? "yes" : "no")
                      << "\n";
            for (const auto& f : rep.fibers) print_fiber_text(f);
        }
    });

    auto* fibers_cmd = app.add_subcommand("fibers", "certified fiber over one T-root");
    fibers_cmd->add_option("--cone", cone_path, "cone JSON file")->required();
    fibers_cmd->add_option("--subtorus", subtorus_path, "subtorus JSON file")->required();
    fibers_cmd->add_option("--t-root", t_root_arg, "T-root, comma separated (e.g. \"3,-1\")")
        ->required();
    fibers_cmd->add_option("--bound", bound, "box bound for the preimage list")->required();
    fibers_cmd->add_flag("--json", as_json, "JSON output");
    fibers_cmd->callback([&] {
        Cone c = io::cone_from_json(io::load_json_file(cone_path));
        SubtorusRestriction s = io::subtorus_from_json(io::load_json_file(subtorus_path));
        FiberReport f = fiber(s, c, parse_vector_arg(t_root_arg), bound);
        if (as_json)
            std::cout << io::fiber_report_to_json(f).dump(2) << "\n";
        else
            print_fiber_text(f);
    });

    auto* surface_cmd =
        app.add_subcommand("surface", "classify a toric surface with a one-dimensional subtorus");
    surface_cmd->add_option("--a", sa, "first coordinate of the second ray")->required();
    surface_cmd->add_option("--b", sb, "second coordinate of the second ray")->required();
    surface_cmd->add_option("--r", sr, "first coordinate of the line generator")->required();
    surface_cmd->add_option("--q", sq, "second coordinate of the line generator")->required();
    surface_cmd->add_option("--bound", bound, "bound for the Lambda member list");
    surface_cmd->add_flag("--json", as_json, "JSON output");
    surface_cmd->add_flag("--family", with_family,
                          "emit the two-parameter family descriptors over Lambda");
    surface_cmd->callback([&] {
        SurfaceData s = SurfaceData::create(sa, sb, sr, sq);
        SurfaceCase sc = classify_surface(s);
        if (as_json) {
            std::cout << io::surface_report_to_json(s, sc, bound, with_family).dump(2) << "\n";
        } else {
            std::cout << "case: " << to_string(sc.tag) << "\n";
            if (!sc.lambda_description.empty())
                std::cout << "  " << sc.lambda_description << "\n";
            std::cout << "  generic row: " << sc.generic_row.root_vectors << " root vector(s), "
                      << sc.generic_row.lift_count << " lift(s), all T-homogeneous LNDs "
                      << (sc.generic_row.all_t_homogeneous ? "are" : "are NOT")
                      << " homogeneous for the big torus\n";
            if (sc.special_row)
                std::cout << "  " << sc.special_row_label << ": "
                          << sc.special_row->root_vectors << " root vector(s), "
                          << sc.special_row->lift_count << " lift(s), all T-homogeneous LNDs "
                          << (sc.special_row->all_t_homogeneous ? "are" : "are NOT")
                          << " homogeneous for the big torus\n";
        }
    });

    auto* cremona_cmd =
        app.add_subcommand("cremona", "root vectors of the volume-preserving automorphism group");
    cremona_cmd->add_option("--n", cremona_n, "number of variables")->required();
    cremona_cmd->add_option("--bound", bound, "total degree bound for the monomials")->required();
    cremona_cmd->add_flag("--json", as_json, "JSON output");
    cremona_cmd->callback([&] {
        auto rv = cremona_roots(cremona_n, bound);
        if (as_json) {
            std::cout << io::cremona_to_json(cremona_n, bound, rv).dump(2) << "\n";
        } else {
            for (const auto& r : rv) std::cout << r.derivation_text << "\n";
            std::cout << "total: " << rv.size() << "\n";
        }
    });

    auto* lnd_cmd = app.add_subcommand("lnd", "symbolic derivation engine");
    lnd_cmd->require_subcommand(1);

    auto* apply_cmd = lnd_cmd->add_subcommand("apply", "apply a derivation to an element");
    apply_cmd->add_option("--derivation", derivation_path, "derivation descriptor JSON file")
        ->required();
    apply_cmd->add_option("--element", element_path, "algebra element JSON file")->required();
    apply_cmd->callback([&] {
        Derivation d = io::derivation_from_json(io::load_json_file(derivation_path));
        AlgebraElement f = io::element_from_json(io::load_json_file(element_path));
        std::cout << io::element_to_json(apply(d, f)).dump(2) << "\n";
    });

    auto* nilp_cmd = lnd_cmd->add_subcommand("nilpotency", "iterate the derivation on probes");
    nilp_cmd->add_option("--derivation", derivation_path, "derivation descriptor JSON file")
        ->required();
    nilp_cmd->add_option("--probes", probes_path, "JSON array of algebra elements")->required();
    nilp_cmd->add_option("--max-iter", max_iter, "iteration cap");
    nilp_cmd->callback([&] {
        Derivation d = io::derivation_from_json(io::load_json_file(derivation_path));
        std::vector<AlgebraElement> probes;
        for (const auto& p : io::load_json_file(probes_path))
            probes.push_back(io::element_from_json(p));
        std::cout << io::verdict_to_json(nilpotency_oracle(d, probes, max_iter)).dump(2) << "\n";
    });

    auto* dec_cmd = lnd_cmd->add_subcommand("decompose", "split into homogeneous pieces");
    dec_cmd->add_option("--derivation", derivation_path, "derivation descriptor JSON file")
        ->required();
    dec_cmd->add_option("--generators", generators_path, "JSON array of generating characters")
        ->required();
    dec_cmd->add_option("--max-iter", max_iter, "oracle iteration cap");
    dec_cmd->callback([&] {
        Derivation d = io::derivation_from_json(io::load_json_file(derivation_path));
        std::vector<LatticeVector> gens;
        for (const auto& g : io::load_json_file(generators_path))
            gens.push_back(io::vector_from_json(g));
        std::cout << io::decomposition_to_json(decompose(d, gens, max_iter)).dump(2) << "\n";
    });

    auto* verify_cmd = app.add_subcommand("verify", "re-derive the published instances");
    verify_cmd->add_option("--suite", suite_name, "suite name or 'all'");
    verify_cmd->add_option("--bound", bound, "box bound used by the suites");
    verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
    verify_cmd->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (verify_cmd->parsed()) {
        std::vector<std::string> names;
        if (suite_name == "all")
            names = suites::suite_names();
        else
            names.push_back(suite_name);
        bool all_pass = true;
        Json report = Json::array();
        for (const auto& name : names) {
            suites::SuiteResult res = suites::run_suite(name, bound, seed);
            all_pass = all_pass && res.passed();
            if (as_json) {
                Json sj;
                sj["suite"] = res.name;
                sj["bound"] = res.bound;
                sj["seed"] = res.seed;
                sj["passed"] = res.passed();
                Json checks = Json::array();
                for (const auto& c : res.checks) {
                    Json cj;
                    cj["label"] = c.label;
                    cj["pass"] = c.pass;
                    if (!c.detail.empty()) cj["detail"] = c.detail;
                    checks.push_back(cj);
                }
                sj["checks"] = checks;
                report.push_back(sj);
            } else {
                std::cout << "suite " << res.name << " (bound " << res.bound << ", seed "
                          << res.seed << ")\n";
                for (const auto& c : res.checks) {
                    std::cout << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.label;
                    if (!c.detail.empty()) std::cout << " -- " << c.detail;
                    std::cout << "\n";
                }
            }
        }
        if (as_json) std::cout << report.dump(2) << "\n";
        return all_pass ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        validate_thread_override();
        return run_app(argc, argv);
    } catch (const DomainError& e) {
        Json err;
        err["error"]["code"] = e.code();
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"]["code"] = "internal";
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
}

// centro: exact pseudo-centrosymmetric matrix analysis and domino-tiling
// counting with sum-of-two-squares certificates.
//
// Exit codes: 0 success, 1 input/parse error, 2 contract not applicable
// (e.g. classification "neither", asymmetric region with --certificate),
// 3 oracle verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <centro/centro.hpp>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitContract = 2;
constexpr int kExitMismatch = 3;

// All commands emit `key: value` lines, or one JSON object with --json.
class Report {
public:
    explicit Report(bool as_json) : as_json_(as_json) {}

    void add(const std::string& key, const std::string& value) {
        if (as_json_) obj_[key] = value;
        else lines_ += key + ": " + value + "\n";
    }
    void add(const std::string& key, long long value) {
        if (as_json_) obj_[key] = value;
        else lines_ += key + ": " + std::to_string(value) + "\n";
    }
    void add_big(const std::string& key, const centro::Integer& value) { add(key, value.str()); }

    void emit(std::ostream& out) const {
        if (as_json_) out << obj_.dump(2) << "\n";
        else out << lines_;
    }

private:
    bool as_json_;
    json obj_;
    std::string lines_;
};

std::size_t guard_k_from_env() {
    if (const char* v = std::getenv("CENTRO_GUARD_K")) {
        try {
            long long k = std::stoll(v);
            if (k >= 1) return static_cast<std::size_t>(k);
        } catch (const std::exception&) {
        }
        throw centro::parse_error("CENTRO_GUARD_K must be a positive integer");
    }
    return 16;
}

centro::LatticeGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw centro::parse_error("cannot open graph file '" + path + "'");
    return centro::parse_lattice_graph(in);
}

centro::Region load_region(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw centro::parse_error("cannot open region file '" + path + "'");
    return centro::parse_region(in);
}

// K specification: `alt:<2k>`, `simple:<path-to-K2>`, `full:<path-to-K>`.
template <class S>
centro::AntiInvolution<S> resolve_k_spec(const std::string& spec, const centro::Matrix<S>& a) {
    using namespace centro;
    if (spec.rfind("alt:", 0) == 0) {
        std::size_t order = 0;
        try {
            order = std::stoul(spec.substr(4));
        } catch (const std::exception&) {
            throw parse_error("malformed K spec '" + spec + "'");
        }
        return AntiInvolution<S>(build_alternating_exchange(order, a.exemplar()));
    }
    auto load_same_field = [&](const std::string& path) -> Matrix<S> {
        ParsedMatrix pm = parse_matrix_file(path);
        if (auto* m = std::get_if<Matrix<S>>(&pm)) return *m;
        throw contract_error("K file '" + path + "' is over a different field than the matrix");
    };
    if (spec.rfind("simple:", 0) == 0) {
        SimpleFormK<S> simple(load_same_field(spec.substr(7)));
        return simple.as_anti_involution();
    }
    if (spec.rfind("full:", 0) == 0) return AntiInvolution<S>(load_same_field(spec.substr(5)));
    throw parse_error("K spec '" + spec + "' must be alt:<2k>, simple:<path>, or full:<path>");
}

std::string certificate_equation(const centro::TwoSquares& t) {
    return t.n.str() + " = " + t.x.str() + "^2 + " + t.y.str() + "^2";
}

template <class S>
int analyze_typed(const centro::Matrix<S>& a, const std::string& k_spec, bool verify_oracle,
                  bool certify_only, bool complementary, Report& report) {
    using namespace centro;
    if (!a.square()) throw contract_error("analyze needs a square matrix");
    AntiInvolution<S> k = resolve_k_spec(k_spec, a);
    CommutationKind kind = classify_commutation(a, k);
    S det = det_exact(a);

    if (!certify_only) {
        report.add("field", field_name(a.exemplar()));
        report.add("order", static_cast<long long>(a.rows()));
        report.add("k-spec", k_spec);
        report.add("classification", to_string(kind));
    }
    using centro::to_string;
    report.add("determinant", to_string(det));

    if (verify_oracle) {
        S oracle_det = oracle::det_cofactor(a);
        report.add("oracle-determinant", to_string(oracle_det));
        report.add("oracle", oracle_det == det ? "AGREE" : "DISAGREE");
        if (oracle_det != det) return kExitMismatch; // unreachable unless the library is broken
    }

    if (complementary) {
        bool centro_form = is_alternating_centrosymmetric(a);
        bool skew_form = !centro_form && is_alternating_skew_centrosymmetric(a);
        if (!centro_form && !skew_form)
            throw contract_error("--complementary needs an alternating (skew-)centrosymmetric matrix");
        ComplementaryDet<S> cd = det_via_complementary(a, skew_form, guard_k_from_env());
        report.add("complementary-x", to_string(cd.x));
        report.add("complementary-y", to_string(cd.y));
        report.add("complementary-det", to_string(cd.det));
    }

    if (kind == CommutationKind::Neither) {
        report.add("certificate", "none (A neither commutes nor anticommutes with K)");
        return kExitContract;
    }
    if (minus_one_is_square_in(a.exemplar())) {
        report.add("certificate",
                   "none (-1 is a square in " + field_name(a.exemplar()) + ")");
        return kExitContract;
    }

    SosCertificate<S> cert = sos_certificate_general(a, k, kind);
    report.add("certificate-x", to_string(cert.x));
    report.add("certificate-y", to_string(cert.y));
    report.add("certificate-sign", cert.sign > 0 ? "+1" : "-1");
    if constexpr (std::is_same_v<S, Rational>) {
        if (is_integral_matrix(a)) {
            TwoSquares t = integral_certificate(a, k, kind);
            report.add("integral-certificate", certificate_equation(t));
        }
    }
    return kExitOk;
}

int analyze_dispatch(const std::string& matrix_path, const std::string& k_spec, bool verify_oracle,
                     bool certify_only, bool complementary, Report& report) {
    using namespace centro;
    ParsedMatrix pm = parse_matrix_file(matrix_path);
    return std::visit(
        [&](const auto& m) {
            return analyze_typed(m, k_spec, verify_oracle, certify_only, complementary, report);
        },
        pm);
}

int run_sos(const std::string& n_text, bool all, Report& report, std::ostream& out, bool as_json) {
    using namespace centro;
    Integer n;
    try {
        n = Integer(n_text);
    } catch (const std::exception&) {
        throw parse_error("malformed integer '" + n_text + "'");
    }
    if (n < 0) throw parse_error("n must be nonnegative");
    if (auto bad = sum_of_two_squares_obstruction(n)) {
        std::string reason = n.str() + " is not a sum of two squares: prime " + bad->prime.str() +
                             " (4k+3) has odd exponent " + std::to_string(bad->exponent);
        if (as_json) {
            report.add("n", n.str());
            report.add("representable", "no");
            report.add("reason", reason);
            report.emit(out);
        } else {
            out << reason << "\n";
        }
        return kExitContract;
    }
    if (as_json) {
        report.add("n", n.str());
        report.add("representable", "yes");
        TwoSquares t = decompose_two_squares(n);
        report.add("x", t.x.str());
        report.add("y", t.y.str());
        report.emit(out);
        return kExitOk;
    }
    if (all) {
        for (const auto& t : enumerate_two_squares(n)) out << certificate_equation(t) << "\n";
    } else {
        out << certificate_equation(decompose_two_squares(n)) << "\n";
    }
    return kExitOk;
}

int run_tile_count(const std::string& region_path, bool certificate, bool verify_oracle,
                   Report& report) {
    using namespace centro;
    Region region = load_region(region_path);
    LatticeGraph dual = dual_graph(region);
    report.add("cells", static_cast<long long>(region.size()));

    if (certificate && !is_rotationally_symmetric(region)) {
        report.add("error", "certificate requires a rotationally symmetric region "
                            "(the sum-of-two-squares corollary applies only there)");
        return kExitContract;
    }

    bool balanced = dual.white_count() == dual.black_count();
    Integer count = balanced ? count_matchings(dual) : Integer(0);
    report.add_big("count", count);

    if (certificate) {
        TwoSquares squares = balanced ? matching_certificate(dual).squares : TwoSquares(0, 0, 0);
        report.add_big("certificate-x", squares.x);
        report.add_big("certificate-y", squares.y);
        report.add("certificate", certificate_equation(squares));
    }
    if (verify_oracle) {
        Integer oracle_count = oracle::enumerate_matchings(dual);
        report.add_big("oracle-count", oracle_count);
        report.add("oracle", oracle_count == count ? "AGREE" : "DISAGREE");
        if (oracle_count != count) return kExitMismatch;
    }
    return kExitOk;
}

int run_match_count(const std::string& graph_path, bool verify_oracle, Report& report) {
    using namespace centro;
    LatticeGraph g = load_graph(graph_path);
    report.add("vertices", static_cast<long long>(g.vertices().size()));
    Integer count = count_matchings(g); // errors on unequal color counts
    report.add_big("count", count);
    if (verify_oracle) {
        Integer oracle_count = oracle::enumerate_matchings(g);
        report.add_big("oracle-count", oracle_count);
        report.add("oracle", oracle_count == count ? "AGREE" : "DISAGREE");
        if (oracle_count != count) return kExitMismatch;
    }
    return kExitOk;
}

int run_match_certify(const std::string& graph_path, Report& report) {
    using namespace centro;
    LatticeGraph g = load_graph(graph_path);
    report.add("vertices", static_cast<long long>(g.vertices().size()));
    if (!check_two_even_symmetric(g)) {
        report.add("error", "graph is not 2-even symmetric about the origin");
        return kExitContract;
    }
    MatchingCertificate cert = matching_certificate(g);
    report.add_big("count", cert.count);
    report.add_big("certificate-x", cert.squares.x);
    report.add_big("certificate-y", cert.squares.y);
    report.add("certificate", certificate_equation(cert.squares));
    for (std::size_t label = 1; label <= cert.labeling.white_of_label.size(); ++label) {
        const auto& v = g.vertices()[cert.labeling.white_of_label[label - 1]];
        report.add("white-" + std::to_string(label),
                   std::to_string(v.x) + " " + std::to_string(v.y));
    }
    for (std::size_t label = 1; label <= cert.labeling.black_of_label.size(); ++label) {
        const auto& v = g.vertices()[cert.labeling.black_of_label[label - 1]];
        report.add("black-" + std::to_string(label),
                   std::to_string(v.x) + " " + std::to_string(v.y));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pseudo-centrosymmetric matrix toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of key: value lines");

    // analyze / certify
    std::string matrix_path, k_spec;
    bool verify_oracle = false, complementary = false;
    auto* analyze = app.add_subcommand("analyze", "classify a matrix against K and certify det");
    analyze->add_option("matrix", matrix_path, "matrix file")->required();
    analyze->add_option("--K", k_spec, "K spec: alt:<2k> | simple:<path> | full:<path>")->required();
    analyze->add_flag("--verify-oracle", verify_oracle, "cross-check det with the cofactor oracle");
    analyze->add_flag("--complementary", complementary,
                      "also evaluate the 2^k complementary-subset formula (guard via CENTRO_GUARD_K)");

    auto* certify = app.add_subcommand("certify", "determinant + certificate only");
    certify->add_option("matrix", matrix_path, "matrix file")->required();
    certify->add_option("--K", k_spec, "K spec")->required();

    // sos
    std::string sos_n;
    bool sos_all = false;
    auto* sos = app.add_subcommand("sos", "write n as x^2 + y^2 or explain why not");
    sos->add_option("n", sos_n, "nonnegative integer")->required();
    sos->add_flag("--all", sos_all, "list every representation");

    // region
    auto* region_cmd = app.add_subcommand("region", "region generators and checks");
    region_cmd->require_subcommand(1);
    auto* region_gen = region_cmd->add_subcommand("gen", "emit a region in the row format");
    region_gen->require_subcommand(1);
    std::int64_t order = 0;
    auto* gen_ad = region_gen->add_subcommand("aztec-diamond", "order-n Aztec diamond");
    gen_ad->add_option("n", order, "order")->required();
    auto* gen_ap = region_gen->add_subcommand("aztec-pillow", "order-n Aztec pillow");
    gen_ap->add_option("n", order, "order")->required();
    std::string steps_text, band_text, steps_down_text;
    auto* gen_gp = region_gen->add_subcommand("pillow", "generalized pillow from steps and band");
    gen_gp->add_option("--steps", steps_text, "comma-separated odd step lengths (NW/SE)")
        ->required();
    gen_gp->add_option("--band", band_text, "central band `y:xmin..xmax[;...]`")->required();
    gen_gp->add_option("--steps-down", steps_down_text,
                       "independent SE steps for an asymmetric region");
    std::string region_path;
    auto* region_check = region_cmd->add_subcommand("check-sym", "rotational symmetry check");
    region_check->add_option("region", region_path, "region file")->required();

    // tile
    auto* tile = app.add_subcommand("tile", "domino tilings of a region");
    tile->require_subcommand(1);
    auto* tile_count = tile->add_subcommand("count", "count tilings via the Kasteleyn pipeline");
    bool want_certificate = false;
    tile_count->add_option("region", region_path, "region file")->required();
    tile_count->add_flag("--certificate", want_certificate, "also emit the two-squares witness");
    tile_count->add_flag("--verify-oracle", verify_oracle, "cross-check with brute-force count");

    // match
    auto* match = app.add_subcommand("match", "perfect matchings of a lattice graph");
    match->require_subcommand(1);
    std::string graph_path;
    auto* match_count = match->add_subcommand("count", "count perfect matchings");
    match_count->add_option("graph", graph_path, "graph file")->required();
    match_count->add_flag("--verify-oracle", verify_oracle, "cross-check with enumeration");
    auto* match_certify = match->add_subcommand("certify", "two-squares certificate + labeling");
    match_certify->add_option("graph", graph_path, "graph file")->required();
    auto* match_check = match->add_subcommand("check-sym", "2-even symmetry check");
    match_check->add_option("graph", graph_path, "graph file")->required();

    CLI11_PARSE(app, argc, argv);

    Report report(as_json);
    try {
        int rc = kExitOk;
        if (*analyze || *certify) {
            rc = analyze_dispatch(matrix_path, k_spec, verify_oracle, certify->parsed(),
                                  complementary, report);
            report.emit(std::cout);
        } else if (*sos) {
            rc = run_sos(sos_n, sos_all, report, std::cout, as_json);
        } else if (*gen_ad || *gen_ap) {
            centro::Region r = gen_ad->parsed() ? centro::aztec_diamond(order)
                                                : centro::aztec_pillow(order);
            std::cout << centro::print_region(r);
        } else if (*gen_gp) {
            std::vector<std::int64_t> steps;
            std::stringstream ss(steps_text);
            std::string item;
            while (std::getline(ss, item, ',')) steps.push_back(std::stoll(item));
            std::optional<std::vector<std::int64_t>> down;
            if (!steps_down_text.empty()) {
                down.emplace();
                std::stringstream ds(steps_down_text);
                while (std::getline(ds, item, ',')) down->push_back(std::stoll(item));
            }
            centro::Region r =
                centro::generalized_pillow(steps, centro::parse_band_spec(band_text), down);
            std::cout << centro::print_region(r);
        } else if (*region_check) {
            centro::Region r = load_region(region_path);
            bool sym = centro::is_rotationally_symmetric(r);
            report.add("cells", static_cast<long long>(r.size()));
            report.add("rotationally-symmetric", sym ? "yes" : "no");
            report.emit(std::cout);
            rc = sym ? kExitOk : kExitContract;
        } else if (*tile_count) {
            rc = run_tile_count(region_path, want_certificate, verify_oracle, report);
            report.emit(std::cout);
        } else if (*match_count) {
            rc = run_match_count(graph_path, verify_oracle, report);
            report.emit(std::cout);
        } else if (*match_certify) {
            rc = run_match_certify(graph_path, report);
            report.emit(std::cout);
        } else if (*match_check) {
            centro::LatticeGraph g = load_graph(graph_path);
            bool sym = centro::check_two_even_symmetric(g);
            report.add("vertices", static_cast<long long>(g.vertices().size()));
            report.add("two-even-symmetric", sym ? "yes" : "no");
            report.emit(std::cout);
            rc = sym ? kExitOk : kExitContract;
        }
        return rc;
    } catch (const centro::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const centro::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const centro::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContract;
    } catch (const centro::dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const centro::arithmetic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
}

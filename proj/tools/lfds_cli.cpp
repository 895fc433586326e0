// Command-line surface for the lfds library.
//
// Exit codes: 0 success, 1 verification failure or a negative fps-test under
// --strict, 2 input error, 3 capacity/configuration error.

#include "lfds/lfds.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

lfds::SystemSpec read_system(const std::string& input) {
    if (input == "-") return lfds::load_system(std::cin);
    return lfds::load_system_file(input);
}

std::string factorization_string(const lfds::Factorization& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.factors.size(); ++i) {
        if (i) os << " * ";
        os << f.factors[i].prime;
        if (f.factors[i].exponent > 1) os << '^' << f.factors[i].exponent;
    }
    return os.str();
}

json bounds_to_json(const lfds::BoundsReport& b) {
    json per_prime = json::array();
    for (const auto& pb : b.per_prime)
        per_prime.push_back({{"prime", pb.prime},
                             {"alpha", pb.alpha},
                             {"height_mod_p", pb.height_mod_p},
                             {"product", pb.product}});
    return json{{"bounds",
                 {{"thm_b", b.thm_b},
                  {"thm_a", b.thm_a},
                  {"m_omega", b.omega_bound},
                  {"xu_zou", b.xu_zou}}},
                {"per_prime", std::move(per_prime)}};
}

json factorization_to_json(const lfds::Factorization& f) {
    json out = json::array();
    for (const auto& pp : f.factors)
        out.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
    return out;
}

void print_per_prime(const lfds::BoundsReport& b) {
    std::cout << "per-prime heights (p, alpha, s, alpha*s):\n";
    for (const auto& pb : b.per_prime)
        std::cout << "  " << pb.prime << "  " << pb.alpha << "  " << pb.height_mod_p << "  "
                  << pb.product << "\n";
}

int cmd_analyze(const std::string& input, bool as_json) {
    const lfds::SystemSpec sys = read_system(input);
    const lfds::Factorization f = lfds::factor(sys.modulus());
    const lfds::BoundsReport bounds = lfds::bounds_report(sys, f);
    const lfds::HeightReport heights = lfds::system_height(sys, f);
    const bool fps = lfds::is_fixed_point_system(sys, bounds.thm_b);

    if (as_json) {
        json doc = lfds::system_to_json(sys);
        doc["dim"] = sys.dim();
        doc["factorization"] = factorization_to_json(f);
        doc.update(bounds_to_json(bounds));
        doc["height"] = heights.system_height;
        json per_component = json::array();
        for (const auto& ch : heights.per_component)
            per_component.push_back(
                {{"prime", ch.prime}, {"alpha", ch.alpha}, {"height", ch.height}});
        doc["per_component"] = std::move(per_component);
        doc["fixed_point_system"] = fps;
        doc["fps_bound"] = bounds.thm_b;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "system: Z_" << sys.modulus() << "^" << sys.dim() << "\n";
    std::cout << "factorization: " << sys.modulus() << " = " << factorization_string(f) << "\n";
    print_per_prime(bounds);
    std::cout << "bounds: thm_b=" << bounds.thm_b << " thm_a=" << bounds.thm_a
              << " m_omega=" << bounds.omega_bound << " xu_zou=" << bounds.xu_zou << "\n";
    std::cout << "exact height: " << heights.system_height << "\n";
    std::cout << "per-component heights:";
    for (const auto& ch : heights.per_component) {
        std::cout << "  " << ch.prime;
        if (ch.alpha > 1) std::cout << '^' << ch.alpha;
        std::cout << ":" << ch.height;
    }
    std::cout << "\n";
    std::cout << "fixed point system: " << (fps ? "yes" : "no") << " (tested with k="
              << bounds.thm_b << ")\n";
    return 0;
}

int cmd_height(const std::string& input, bool as_json) {
    const lfds::SystemSpec sys = read_system(input);
    const lfds::Factorization f = lfds::factor(sys.modulus());
    const lfds::HeightReport heights = lfds::system_height(sys, f);

    if (as_json) {
        json per_component = json::array();
        for (const auto& ch : heights.per_component) {
            json chain = json::array();
            for (const auto& v : ch.image_chain) chain.push_back(v.str());
            per_component.push_back({{"prime", ch.prime},
                                     {"alpha", ch.alpha},
                                     {"height", ch.height},
                                     {"image_chain", std::move(chain)}});
        }
        json doc{{"modulus", sys.modulus()},
                 {"dim", sys.dim()},
                 {"height", heights.system_height},
                 {"per_component", std::move(per_component)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "height: " << heights.system_height << "\n";
    for (const auto& ch : heights.per_component) {
        std::cout << "  component " << ch.prime;
        if (ch.alpha > 1) std::cout << '^' << ch.alpha;
        std::cout << ": height " << ch.height << ", image chain";
        for (const auto& v : ch.image_chain) std::cout << " " << v.str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_bounds(const std::string& input, bool as_json) {
    const lfds::SystemSpec sys = read_system(input);
    const lfds::Factorization f = lfds::factor(sys.modulus());
    const lfds::BoundsReport bounds = lfds::bounds_report(sys, f);

    if (as_json) {
        json doc{{"modulus", sys.modulus()}, {"dim", sys.dim()}};
        doc["factorization"] = factorization_to_json(f);
        doc.update(bounds_to_json(bounds));
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "factorization: " << sys.modulus() << " = " << factorization_string(f) << "\n";
    print_per_prime(bounds);
    std::cout << "thm_b=" << bounds.thm_b << " thm_a=" << bounds.thm_a << " m_omega="
              << bounds.omega_bound << " xu_zou=" << bounds.xu_zou << "\n";
    return 0;
}

int cmd_fps_test(const std::string& input, const std::string& bound_name, bool strict,
                 bool as_json) {
    const lfds::SystemSpec sys = read_system(input);
    const lfds::Factorization f = lfds::factor(sys.modulus());

    uint64_t k = 0;
    if (bound_name == "thm-b")
        k = lfds::bound_thm_b(sys, f).thm_b;
    else if (bound_name == "thm-a")
        k = lfds::bound_thm_a(f, sys.dim());
    else if (bound_name == "omega")
        k = lfds::bound_omega(f, sys.dim());
    else
        k = lfds::bound_xu_zou(sys.modulus(), sys.dim());

    const bool fps = lfds::is_fixed_point_system(sys, k);
    if (as_json) {
        std::cout << json{{"fixed_point_system", fps}, {"bound", bound_name}, {"k", k}}.dump(2)
                  << "\n";
    } else {
        std::cout << "fixed point system: " << (fps ? "yes" : "no") << " (" << bound_name
                  << " bound, k=" << k << ")\n";
    }
    return (strict && !fps) ? 1 : 0;
}

int cmd_graph(const std::string& input, bool dot, uint64_t cap) {
    const lfds::SystemSpec sys = read_system(input);
    const lfds::StateGraph g = lfds::enumerate(sys, cap);
    if (dot) {
        lfds::write_dot(std::cout, g);
        return 0;
    }
    size_t cycle_vertices = 0, leaves = 0, fixed_points = 0;
    for (size_t x = 0; x < g.size; ++x) {
        if (g.period_of[x] >= 1) ++cycle_vertices;
        if (g.period_of[x] == 1) ++fixed_points;
        if (g.is_leaf[x]) ++leaves;
    }
    std::cout << "states: " << g.size << "\n"
              << "cycle vertices: " << cycle_vertices << " (" << fixed_points
              << " fixed points)\n"
              << "leaves: " << leaves << "\n"
              << "height: " << lfds::brute_height(g) << "\n";
    return 0;
}

int cmd_sample(uint64_t modulus, size_t dim, size_t count, uint64_t seed,
               const std::string& mode, const std::string& out_path) {
    lfds::ExperimentConfig cfg;
    cfg.modulus = modulus;
    cfg.dim = dim;
    cfg.count = count;
    cfg.seed = seed;
    cfg.mode = (mode == "non-invertible") ? lfds::SampleMode::NonInvertibleOnly
                                          : lfds::SampleMode::Uniform;
    const auto rows = lfds::run_experiment(cfg);
    if (out_path == "-") {
        lfds::write_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw lfds::ConfigError("cannot open output file: " + out_path);
        lfds::write_csv(out, rows);
    }
    return 0;
}

int cmd_verify(size_t count, uint64_t seed, uint64_t cap, bool inject_fault) {
    lfds::VerifyOptions opt;
    opt.count = count;
    opt.seed = seed;
    opt.cap = cap;
    opt.inject_fault = inject_fault;
    const auto results = lfds::run_verification_suites(opt);

    bool ok = true;
    for (const auto& suite : results) {
        std::cout << suite.suite << ": " << (suite.instances - suite.failures) << "/"
                  << suite.instances << " instances passed\n";
        if (suite.failures > 0) {
            ok = false;
            std::cout << "  counterexample: " << suite.first_counterexample << "\n";
        }
    }
    std::cout << (ok ? "all suites passed" : "FAILURES detected") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact heights, height bounds, and fixed-point tests for linear systems over Z_n"};
    app.require_subcommand(1);

    std::string input = "-";
    bool as_json = false;
    std::string bound_name = "thm-b";
    bool strict = false;
    bool dot = false;
    uint64_t cap = lfds::kDefaultStateCap;
    uint64_t modulus = 0;
    size_t dim = 0;
    size_t count = 100;
    uint64_t seed = 1;
    std::string mode = "uniform";
    std::string out_path = "-";
    size_t verify_count = 200;
    bool inject_fault = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", input, "system file, JSON or text ('-' reads stdin)");
    };

    auto* analyze = app.add_subcommand(
        "analyze", "factorization, all bounds, exact height, fixed-point verdict");
    add_input(analyze);
    analyze->add_flag("--json", as_json, "emit a JSON report");

    auto* height = app.add_subcommand("height", "exact height with per-component image chains");
    add_input(height);
    height->add_flag("--json", as_json, "emit a JSON report");

    auto* bounds = app.add_subcommand("bounds", "the four height bounds");
    add_input(bounds);
    bounds->add_flag("--json", as_json, "emit a JSON report");

    auto* fps = app.add_subcommand("fps-test", "test whether every state reaches a fixed point");
    add_input(fps);
    fps->add_option("--bound", bound_name, "bound used as the test exponent")
        ->check(CLI::IsMember({"thm-b", "thm-a", "omega", "xu-zou"}));
    fps->add_flag("--strict", strict, "exit 1 when the system is not a fixed point system");
    fps->add_flag("--json", as_json, "emit a JSON report");

    auto* graph = app.add_subcommand("graph", "enumerate the state space");
    add_input(graph);
    graph->add_flag("--dot", dot, "emit the state graph in DOT format");
    graph->add_option("--cap", cap, "state-count limit");

    auto* sample = app.add_subcommand("sample", "seeded height-vs-bounds experiment, CSV output");
    sample->add_option("--modulus,-n", modulus, "modulus n")->required();
    sample->add_option("--dim,-m", dim, "dimension m")->required();
    sample->add_option("--count", count, "number of sampled matrices");
    sample->add_option("--seed", seed, "generator seed");
    sample->add_option("--mode", mode, "sampling mode")
        ->check(CLI::IsMember({"uniform", "non-invertible"}));
    sample->add_option("--out", out_path, "output path ('-' writes stdout)");

    auto* verify = app.add_subcommand("verify", "run the structural verification suites");
    verify->add_option("--count", verify_count, "instances per suite");
    verify->add_option("--seed", seed, "generator seed");
    verify->add_option("--cap", cap, "state-count limit");
    verify->add_flag("--inject-fault", inject_fault)->group(""); // test hook, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(input, as_json);
        if (app.got_subcommand(height)) return cmd_height(input, as_json);
        if (app.got_subcommand(bounds)) return cmd_bounds(input, as_json);
        if (app.got_subcommand(fps)) return cmd_fps_test(input, bound_name, strict, as_json);
        if (app.got_subcommand(graph)) return cmd_graph(input, dot, cap);
        if (app.got_subcommand(sample))
            return cmd_sample(modulus, dim, count, seed, mode, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(verify_count, seed, cap, inject_fault);
    } catch (const lfds::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lfds::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lfds::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}

#include <atomic>
#include <csignal>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hstar/errors.hpp"
#include "hstar/fiber.hpp"
#include "hstar/hadamard.hpp"
#include "hstar/hilbert.hpp"
#include "hstar/io.hpp"
#include "hstar/parser.hpp"
#include "hstar/toricgraph.hpp"
#include "hstar/verify.hpp"

namespace {

std::atomic<bool> g_cancel{false};

extern "C" void on_interrupt(int) { g_cancel.store(true); }

using hstar::Ideal;
using json = nlohmann::json;

struct Options {
    std::string format = "human";
    hstar::Caps caps;

    Options() { caps.cancel = &g_cancel; }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    cmd->add_option("--spair-limit", opt.caps.spair_limit, "S-pair reduction cap");
    cmd->add_option("--term-limit", opt.caps.term_limit, "Total term cap");
    cmd->add_option("--hf-degree-cap", opt.caps.hf_degree_cap, "Largest Hilbert-function degree");
    cmd->add_option("--walk-limit", opt.caps.walk_limit, "Walk enumeration step cap");
    cmd->add_option("--cyclo-order-cap", opt.caps.cyclo_order_cap, "Largest cyclotomic order");
}

std::vector<std::string> ideal_lines(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.generators()) out.push_back(hstar::to_string(g));
    if (out.empty()) out.push_back("0");
    return out;
}

std::vector<std::string> basis_lines(const std::vector<hstar::Polynomial>& elements) {
    std::vector<std::string> out;
    for (const auto& g : elements) out.push_back(hstar::to_string(g));
    if (out.empty()) out.push_back("0");
    return out;
}

void emit(const Options& opt, const json& doc, const std::vector<std::string>& human) {
    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& line : human) std::cout << line << "\n";
    }
}

int cmd_gb(const std::string& path, const std::string& order_name, bool reduced,
           const Options& opt) {
    Ideal I = hstar::load_ideal(path, opt.caps);
    hstar::MonomialOrder ord = hstar::MonomialOrder::parse(order_name);
    hstar::GroebnerBasis gb = reduced ? hstar::reduced_groebner_basis(I, ord, opt.caps)
                                      : hstar::buchberger(I, ord, opt.caps);
    std::vector<std::string> lines = basis_lines(gb.elements);
    json doc = {{"command", "gb"},
                {"inputs", {{"ideal", hstar::ideal_to_json(I)}, {"order", order_name}}},
                {"reduced", reduced},
                {"generators", lines}};
    emit(opt, doc, lines);
    return 0;
}

std::string fast_status_name(hstar::FastStatus s) {
    return s == hstar::FastStatus::certified ? "certified" : "containment-only";
}

int emit_product(const Options& opt, const char* command, const json& inputs, const Ideal& result,
                 const std::string& path_taken, const std::string& status) {
    std::vector<std::string> lines = {"path: " + path_taken, "status: " + status};
    std::vector<std::string> gens = ideal_lines(result);
    lines.insert(lines.end(), gens.begin(), gens.end());
    json doc = {{"command", command}, {"inputs", inputs},     {"path", path_taken},
                {"status", status},   {"generators", gens}};
    emit(opt, doc, lines);
    return 0;
}

int cmd_hadamard(const std::string& path_a, const std::string& path_b, const std::string& mode,
                 const std::string& witness_text, const Options& opt) {
    Ideal I = hstar::load_ideal(path_a, opt.caps);
    Ideal J = hstar::load_ideal(path_b, opt.caps);
    std::optional<hstar::ProjectivePoint> witness;
    if (!witness_text.empty()) witness = hstar::parse_point_arg(witness_text, I.ring());
    json inputs = {{"ideal_1", hstar::ideal_to_json(I)},
                   {"ideal_2", hstar::ideal_to_json(J)},
                   {"mode", mode}};
    if (witness) inputs["witness"] = hstar::point_to_json(*witness);

    if (mode == "elimination") {
        Ideal result = hstar::hadamard_product_elimination(I, J, opt.caps);
        return emit_product(opt, "hadamard", inputs, result, "elimination", "exact");
    }
    if (mode == "fast") {
        std::optional<hstar::FastResult> fast_result;
        try {
            fast_result = hstar::hadamard_product_binomial_fast(I, J, witness);
        } catch (const hstar::validation_error& e) {
            std::cerr << "fast mode failed: " << e.what() << "\n";
            return 3;
        }
        const hstar::FastResult& fast = *fast_result;
        if (fast.witness_supplied && !fast.witness_valid) {
            std::cerr << "fast mode failed: the supplied witness does not lie on either variety\n";
            return 3;
        }
        return emit_product(opt, "hadamard", inputs, fast.ideal, "fast",
                            fast_status_name(fast.status));
    }
    // auto: use the fast path only when it certifies itself, else eliminate.
    try {
        hstar::FastResult fast = hstar::hadamard_product_binomial_fast(I, J, witness);
        if (fast.status == hstar::FastStatus::certified)
            return emit_product(opt, "hadamard", inputs, fast.ideal, "fast", "certified");
    } catch (const hstar::validation_error&) {
    }
    Ideal result = hstar::hadamard_product_elimination(I, J, opt.caps);
    return emit_product(opt, "hadamard", inputs, result, "elimination", "exact");
}

int cmd_power(const std::string& path, long r, const std::string& mode, const Options& opt) {
    Ideal I = hstar::load_ideal(path, opt.caps);
    json inputs = {{"ideal", hstar::ideal_to_json(I)}, {"r", r}, {"mode", mode}};
    if (mode == "fast") {
        try {
            Ideal result = hstar::hadamard_power(I, r, hstar::PowerMode::fast, opt.caps);
            return emit_product(opt, "power", inputs, result, "fast", "exact");
        } catch (const hstar::validation_error& e) {
            std::cerr << "fast mode failed: " << e.what() << "\n";
            return 3;
        }
    }
    if (mode == "elimination") {
        Ideal result = hstar::hadamard_power(I, r, hstar::PowerMode::elimination, opt.caps);
        return emit_product(opt, "power", inputs, result, "elimination", "exact");
    }
    try {
        Ideal result = hstar::hadamard_power(I, r, hstar::PowerMode::fast, opt.caps);
        return emit_product(opt, "power", inputs, result, "fast", "exact");
    } catch (const hstar::validation_error&) {
        Ideal result = hstar::hadamard_power(I, r, hstar::PowerMode::elimination, opt.caps);
        return emit_product(opt, "power", inputs, result, "elimination", "exact");
    }
}

int cmd_toric(const std::string& graph_path, const std::string& subgraph_path, bool verify,
              const Options& opt) {
    hstar::Graph G = hstar::load_graph(graph_path);
    json inputs = {{"graph", hstar::graph_to_json(G)}};
    if (subgraph_path.empty() && !verify) {
        Ideal IG = hstar::toric_ideal_graph(G, opt.caps);
        std::vector<std::string> lines = ideal_lines(IG);
        json doc = {{"command", "toric"}, {"inputs", inputs}, {"generators", lines}};
        emit(opt, doc, lines);
        return 0;
    }
    hstar::Graph H = subgraph_path.empty() ? G : hstar::load_graph(subgraph_path);
    if (!subgraph_path.empty()) inputs["subgraph"] = hstar::graph_to_json(H);
    if (!verify) {
        Ideal ext = hstar::extend_subgraph_ideal(H, G, opt.caps);
        std::vector<std::string> lines = ideal_lines(ext);
        json doc = {{"command", "toric"}, {"inputs", inputs}, {"generators", lines}};
        emit(opt, doc, lines);
        return 0;
    }
    hstar::SubgraphTheoremReport rep = hstar::verify_subgraph_theorem(G, H, opt.caps);
    std::vector<std::string> lines = {rep.holds ? "Theorem holds: I_G * I_H^e = I_H^e"
                                                : "Theorem fails: I_G * I_H^e != I_H^e",
                                      "details: " + rep.details};
    for (const auto& g : ideal_lines(rep.rhs)) lines.push_back(g);
    json doc = {{"command", "toric"},
                {"inputs", inputs},
                {"holds", rep.holds},
                {"details", rep.details},
                {"lhs", ideal_lines(rep.lhs)},
                {"rhs", ideal_lines(rep.rhs)}};
    emit(opt, doc, lines);
    return 0;
}

std::string fiber_status_name(hstar::FiberStatus s) {
    switch (s) {
        case hstar::FiberStatus::certified: return "certified";
        case hstar::FiberStatus::containment_only: return "containment-only";
        default: return "hypothesis-failed";
    }
}

int cmd_transform(const std::string& ideal_path, const std::string& point_text, bool fiber,
                  const std::string& order_name, const Options& opt) {
    Ideal I = hstar::load_ideal(ideal_path, opt.caps);
    hstar::ProjectivePoint p = hstar::parse_point_arg(point_text, I.ring());
    if (!p.has_no_zero_coordinate()) {
        std::cerr << "transform requires a point with nonzero coordinates\n";
        return 3;
    }
    json inputs = {{"ideal", hstar::ideal_to_json(I)}, {"point", hstar::point_to_json(p)}};
    if (!fiber) {
        Ideal result = hstar::point_variety_ideal(p, I);
        std::vector<std::string> lines = ideal_lines(result);
        json doc = {{"command", "transform"}, {"inputs", inputs}, {"generators", lines}};
        emit(opt, doc, lines);
        return 0;
    }
    hstar::MonomialOrder ord = hstar::MonomialOrder::parse(order_name);
    hstar::FiberReport rep = hstar::fiber_ideal(I, p, ord, opt.caps);
    std::string status = fiber_status_name(rep.status);
    auto yesno = [](bool b) { return b ? "true" : "false"; };
    std::vector<std::string> lines = {"status: " + status,
                                      std::string("I_saturated: ") + yesno(rep.I_saturated),
                                      std::string("monomial_free: ") + yesno(rep.monomial_free),
                                      std::string("min_gb_degree_ok: ") + yesno(rep.min_gb_degree_ok),
                                      std::string("J_saturated: ") + yesno(rep.J_saturated),
                                      "details: " + rep.details};
    if (rep.fiber) {
        lines.push_back("fiber:");
        for (const auto& g : ideal_lines(*rep.fiber)) lines.push_back(g);
    }
    json doc = {{"command", "transform"},
                {"inputs", inputs},
                {"fiber", rep.fiber ? json(ideal_lines(*rep.fiber)) : json(nullptr)},
                {"groebner_basis", basis_lines(rep.gb.elements)},
                {"I_saturated", rep.I_saturated},
                {"monomial_free", rep.monomial_free},
                {"min_gb_degree_ok", rep.min_gb_degree_ok},
                {"J_saturated", rep.J_saturated},
                {"status", status},
                {"details", rep.details}};
    emit(opt, doc, lines);
    return 0;
}

int cmd_invariants(const std::string& ideal_path, const std::string& order_name, int upto,
                   const Options& opt) {
    Ideal I = hstar::load_ideal(ideal_path, opt.caps);
    if (!I.is_homogeneous())
        throw hstar::validation_error("invariants require a homogeneous ideal");
    hstar::MonomialOrder ord = hstar::MonomialOrder::parse(order_name);
    if (upto < 0 || upto > opt.caps.hf_degree_cap)
        throw hstar::validation_error("--upto must lie between 0 and the Hilbert degree cap");
    hstar::MonomialIdeal lt = hstar::leading_term_ideal(I, ord, opt.caps);
    std::vector<std::string> lines;
    std::vector<std::string> values;
    for (int i = 0; i <= upto; ++i) {
        mpz_class v = hstar::hilbert_function(lt, i, opt.caps);
        lines.push_back("HF(" + std::to_string(i) + ") = " + v.get_str());
        values.push_back(v.get_str());
    }
    hstar::HilbertData hd = hstar::hilbert_polynomial(I, ord, opt.caps);
    std::string poly_text =
        hd.polynomial ? hstar::unipoly_str(*hd.polynomial, "t") : std::string("unknown");
    lines.push_back("hilbert polynomial: " + poly_text);
    hstar::DegreeDimension dd = hstar::degree_and_dimension(I, opt.caps);
    lines.push_back("degree: " + std::to_string(dd.degree));
    lines.push_back("dimension: " + std::to_string(dd.dimension));
    json doc = {{"command", "invariants"},
                {"inputs", {{"ideal", hstar::ideal_to_json(I)}, {"order", order_name}}},
                {"hilbert_function", values},
                {"hilbert_polynomial", poly_text},
                {"degree", dd.degree},
                {"dimension", dd.dimension}};
    emit(opt, doc, lines);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int cases, const Options& opt) {
    std::vector<hstar::SuiteResult> results = hstar::run_suites(suite, seed, cases, opt.caps);
    std::vector<std::string> lines;
    json jsuites = json::array();
    bool all_ok = true;
    int total = 0;
    for (const auto& r : results) {
        all_ok = all_ok && r.ok();
        total += r.checks;
        std::string note = cases == 0 ? " (0 randomized cases)" : "";
        lines.push_back("suite " + r.suite + ": " + std::to_string(r.passed) + "/" +
                        std::to_string(r.checks) + " checks passed" + note);
        for (const auto& f : r.failures) lines.push_back("  FAIL: " + f);
        jsuites.push_back({{"suite", r.suite},
                           {"checks", r.checks},
                           {"passed", r.passed},
                           {"failures", r.failures}});
    }
    lines.push_back(all_ok ? "all suites passed (" + std::to_string(total) + " checks)"
                           : "suite failures detected");
    json doc = {{"command", "verify"}, {"suite", suite},   {"seed", seed},
                {"cases", cases},      {"ok", all_ok},     {"suites", jsuites}};
    emit(opt, doc, lines);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    CLI::App app{"Exact Hadamard products of projective varieties via their defining ideals"};
    app.require_subcommand(1);

    int rc = 0;

    Options gb_opt;
    std::string gb_path, gb_order = "grevlex";
    bool gb_reduced = true;
    auto* gb = app.add_subcommand("gb", "Groebner basis of an ideal");
    gb->add_option("ideal", gb_path, "Ideal file")->required();
    gb->add_option("--order", gb_order, "Monomial order")
        ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    gb->add_flag("--reduced,!--no-reduced", gb_reduced, "Reduce the basis (default on)");
    add_common(gb, gb_opt);
    gb->callback([&] { rc = cmd_gb(gb_path, gb_order, gb_reduced, gb_opt); });

    Options had_opt;
    std::string had_a, had_b, had_mode = "auto", had_witness;
    auto* had = app.add_subcommand("hadamard", "Hadamard product of two ideals");
    had->add_option("ideal-1", had_a, "First ideal file")->required();
    had->add_option("ideal-2", had_b, "Second ideal file")->required();
    had->add_option("--mode", had_mode, "Computation path")
        ->check(CLI::IsMember({"auto", "fast", "elimination"}));
    had->add_option("--witness", had_witness, "Witness point (file or inline c0:c1:...)");
    add_common(had, had_opt);
    had->callback([&] { rc = cmd_hadamard(had_a, had_b, had_mode, had_witness, had_opt); });

    Options pow_opt;
    std::string pow_path, pow_mode = "auto";
    long pow_r = 0;
    auto* pow = app.add_subcommand("power", "Hadamard power of an ideal");
    pow->add_option("ideal", pow_path, "Ideal file")->required();
    pow->add_option("r", pow_r, "Exponent (r >= 0)")->required()->check(CLI::NonNegativeNumber);
    pow->add_option("--mode", pow_mode, "Computation path")
        ->check(CLI::IsMember({"auto", "fast", "elimination"}));
    add_common(pow, pow_opt);
    pow->callback([&] { rc = cmd_power(pow_path, pow_r, pow_mode, pow_opt); });

    Options tor_opt;
    std::string tor_graph, tor_subgraph;
    bool tor_verify = false;
    auto* tor = app.add_subcommand("toric", "Toric ideal of a graph");
    tor->add_option("graph", tor_graph, "Graph file")->required();
    tor->add_option("--subgraph", tor_subgraph, "Subgraph file");
    tor->add_flag("--verify", tor_verify, "Check I_G * I_H^e = I_H^e");
    add_common(tor, tor_opt);
    tor->callback([&] { rc = cmd_toric(tor_graph, tor_subgraph, tor_verify, tor_opt); });

    Options tra_opt;
    std::string tra_path, tra_point, tra_order = "grevlex";
    bool tra_fiber = false;
    auto* tra = app.add_subcommand("transform", "Hadamard transformation by a point");
    tra->add_option("ideal", tra_path, "Ideal file")->required();
    tra->add_option("point", tra_point, "Point (file or inline c0:c1:...)")->required();
    tra->add_flag("--fiber", tra_fiber, "Compute the fiber ideal report");
    tra->add_option("--order", tra_order, "Monomial order for the fiber basis")
        ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    add_common(tra, tra_opt);
    tra->callback([&] { rc = cmd_transform(tra_path, tra_point, tra_fiber, tra_order, tra_opt); });

    Options inv_opt;
    std::string inv_path, inv_order = "grevlex";
    int inv_upto = 10;
    auto* inv = app.add_subcommand("invariants", "Hilbert function, degree, dimension");
    inv->add_option("ideal", inv_path, "Ideal file")->required();
    inv->add_option("--order", inv_order, "Monomial order")
        ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    inv->add_option("--upto", inv_upto, "Largest degree in the Hilbert table")
        ->capture_default_str();
    add_common(inv, inv_opt);
    inv->callback([&] { rc = cmd_invariants(inv_path, inv_order, inv_upto, inv_opt); });

    Options ver_opt;
    std::string ver_suite = "all";
    std::uint64_t ver_seed = 0;
    int ver_cases = 25;
    auto* ver = app.add_subcommand("verify", "Run the cross-validation suites");
    ver->add_option("--suite", ver_suite, "Suite to run")
        ->check(CLI::IsMember({"hadamard", "toric", "hilbert", "fiber", "all"}))
        ->capture_default_str();
    ver->add_option("--seed", ver_seed, "Random seed")->capture_default_str();
    ver->add_option("--cases", ver_cases, "Randomized cases per suite")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_common(ver, ver_opt);
    ver->callback([&] { rc = cmd_verify(ver_suite, ver_seed, ver_cases, ver_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hstar::cancelled_error&) {
        std::cerr << "cancelled\n";
        return 130;
    } catch (const hstar::cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const hstar::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

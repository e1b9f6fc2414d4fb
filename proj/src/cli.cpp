#include "tautring/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tautring/document.hpp"
#include "tautring/fourier.hpp"
#include "tautring/gonality.hpp"
#include "tautring/sampling.hpp"
#include "tautring/theta.hpp"

namespace tautring {

namespace {

constexpr int kRandomPairs = 100;

CheckResult check(std::string name, const Verdict& v) { return {std::move(name), v.ok, v.detail}; }

template <typename Range, typename F>
CheckResult check_all(std::string name, const Range& items, F&& verify) {
    std::size_t count = 0;
    for (const auto& item : items) {
        const Verdict v = verify(item);
        ++count;
        if (!v) return {std::move(name), false, v.detail};
    }
    return {name + " [" + std::to_string(count) + " cases]", true, {}};
}

void fourier_suite(const VandermondeBridge& bridge, std::vector<CheckResult>& out) {
    const JacobianContext& ctx = bridge.context();
    const int g = ctx.genus();
    const auto nb = n_basis(ctx);
    const auto pb = p_basis(ctx);

    out.push_back(check_all("double Fourier on newton basis", nb,
                            [&](const NMonomial& m) { return verify_double_fourier(NElement(ctx, m)); }));
    out.push_back(check_all("double Fourier on pontryagin basis", pb,
                            [&](const PMonomial& m) { return verify_double_fourier(PElement(ctx, m)); }));
    out.push_back(check_all("Fourier bidegree law", nb, [&](const NMonomial& m) -> Verdict {
        const Bidegree b = m.bidegree(ctx);
        const auto image = fourier_forward(NElement(ctx, m)).homogeneous_bidegree();
        if (!image || *image == Bidegree{g - b.p + b.s, b.s}) return {};
        return {false, "N[" + std::to_string(b.p) + "," + std::to_string(b.s) + "] lands in the wrong bidegree"};
    }));

    NElement sum(ctx);
    for (int k = 1; k <= g - 1; ++k) sum += newton_class(ctx, k);
    const NElement fc = fourier_backward(curve_class(ctx));
    out.push_back(check("-F(C) = N^1 + ... + N^(g-1)",
                        fc == -sum ? Verdict{} : Verdict{false, to_string(fc)}));

    const PElement fwg = fourier_forward(w_class(ctx, g));
    out.push_back(check("F(w^g) = 1", fwg == fundamental_class(ctx) && fourier_backward(point_class(ctx)) == n_one(ctx)
                                          ? Verdict{}
                                          : Verdict{false, to_string(fwg)}));

    std::vector<int> ds(static_cast<std::size_t>(g + 1));
    std::iota(ds.begin(), ds.end(), 0);
    out.push_back(check_all("F(C^{*d}/d!) closed form", ds, [&](int d) -> Verdict {
        const auto [lhs, rhs] = fourier_of_wd(ctx, d);
        if (lhs == rhs) return {};
        return {false, "d=" + std::to_string(d) + ": " + to_string(lhs) + " vs " + to_string(rhs)};
    }));
}

void dual_suite(const VandermondeBridge& bridge, std::vector<CheckResult>& out) {
    const JacobianContext& ctx = bridge.context();
    for (int r = 0; r <= ctx.genus(); ++r)
        out.push_back(check("dual formula r=" + std::to_string(r), verify_dual_formula(ctx, r, bridge)));
}

void convolution_suite(const VandermondeBridge& bridge, std::vector<CheckResult>& out) {
    const JacobianContext& ctx = bridge.context();
    ElementSampler sampler(ctx, 0x636f6e76ULL + static_cast<unsigned>(ctx.genus()));
    std::vector<std::pair<PElement, PElement>> ppairs;
    std::vector<std::pair<NElement, NElement>> npairs;
    for (int i = 0; i < kRandomPairs; ++i) ppairs.emplace_back(sampler.pelement(), sampler.pelement());
    for (int i = 0; i < kRandomPairs; ++i) npairs.emplace_back(sampler.nelement(), sampler.nelement());
    out.push_back(check_all("F(x*y) = Fx.Fy", ppairs, [](const auto& p) { return verify_convolution_law(p.first, p.second); }));
    out.push_back(check_all("F(x.y) = (-1)^g Fx*Fy", npairs, [](const auto& p) { return verify_product_law(p.first, p.second); }));
}

void poincare_suite(const VandermondeBridge& bridge, std::vector<CheckResult>& out) {
    const JacobianContext& ctx = bridge.context();
    const int g = ctx.genus();
    const PElement top = theta_power(ctx, g, bridge);
    const Rational degree = intersection_number(top);
    const Rational expected(factorial(static_cast<unsigned>(g)));
    out.push_back(check("deg theta^g = g!", degree == expected ? Verdict{} : Verdict{false, "got " + degree.str()}));
    const PElement beyond = theta_mul(top, bridge);
    out.push_back(check("theta^(g+1) = 0", beyond.is_zero() ? Verdict{} : Verdict{false, to_string(beyond)}));
    const PElement unit = theta_mul(fundamental_class(ctx), bridge);
    const PElement theta(ctx, PMonomial::repeated(0, g - 1), Rational(factorial(static_cast<unsigned>(g - 1))).inverse());
    out.push_back(check("theta . [J] = theta", unit == theta ? Verdict{} : Verdict{false, to_string(unit)}));
}

std::vector<long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "'" + item + "' is not an integer");
        }
        if (used != item.size()) throw CLI::ValidationError(what, "'" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string render_element(const AnyElement& x, const std::string& format) {
    if (format == "csv") return element_csv(x);
    if (format == "text") return std::visit([](const auto& e) { return to_string(e); }, x) + "\n";
    return serialize_element(x).dump(2) + "\n";
}

}  // namespace

std::vector<CheckResult> run_suite(const VandermondeBridge& bridge, std::string_view suite) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (all || suite == "fourier") fourier_suite(bridge, out);
    if (all || suite == "dual") dual_suite(bridge, out);
    if (all || suite == "convolution") convolution_suite(bridge, out);
    if (all || suite == "poincare") poincare_suite(bridge, out);
    if (out.empty()) throw DomainError("unknown suite '" + std::string(suite) + "'");
    return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculator for the tautological ring of a Jacobian", "tautring"};
    app.fallthrough();
    app.require_subcommand(1);

    int genus = 0;
    std::optional<int> gonality;
    std::string format = "json";
    std::string nodes_text;
    std::string out_path;
    app.add_option("--genus", genus, "Genus g >= 2")->required();
    app.add_option("--gonality", gonality, "Gonality d, 2 <= d <= g+1");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--nodes", nodes_text, "Vandermonde nodes k1,k2,... (distinct nonzero integers, one per surviving level)");
    app.add_option("--out", out_path, "Write the document to FILE instead of stdout");

    auto* dims = app.add_subcommand("dims", "Dimension table of the graded pieces");

    int power = 0;
    auto* theta_power_cmd = app.add_subcommand("theta-power", "theta^J on the convolution side");
    theta_power_cmd->add_option("--power", power, "Exponent J >= 0")->required();

    std::string in_path = "-";
    std::string direction;
    auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of an element document");
    fourier_cmd->add_option("--in", in_path, "Input document (default: stdin)");
    fourier_cmd->add_option("--direction", direction, "fwd (newton -> pontryagin) or bwd")
        ->required()
        ->check(CLI::IsMember({"fwd", "bwd"}));

    std::string ktuple_text;
    auto* expand_cmd = app.add_subcommand("expand", "Expand (k1_*C)*...*(kr_*C) into Pontryagin monomials");
    expand_cmd->add_option("--ktuple", ktuple_text, "k1,...,kr")->required();

    int theta_exponent = 0;
    auto* intersect_cmd = app.add_subcommand("intersect", "Degree of theta^m . (k1_*C)*...*(kr_*C)");
    intersect_cmd->add_option("--theta-exponent", theta_exponent, "m >= 0")->required();
    intersect_cmd->add_option("--ktuple", ktuple_text, "k1,...,kr")->required();

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run identity suites; exit 1 on any failure");
    verify_cmd->add_option("--suite", suite, "fourier|dual|convolution|poincare|all")
        ->check(CLI::IsMember({"fourier", "dual", "convolution", "poincare", "all"}));

    auto* hyper_cmd = app.add_subcommand("hyperelliptic", "Presentation report for gonality 2");
    auto* trig_cmd = app.add_subcommand("trigonal", "Presentation report for gonality 3");
    auto* bound_cmd = app.add_subcommand("bound", "Number of w-classes that generate R");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    std::ostringstream doc;
    int status = exit_code::ok;
    try {
        const JacobianContext ctx(genus, gonality);
        std::optional<VandermondeBridge> bridge;
        auto get_bridge = [&]() -> const VandermondeBridge& {
            if (!bridge) {
                if (nodes_text.empty())
                    bridge.emplace(ctx);
                else
                    bridge.emplace(ctx, parse_int_list(nodes_text, "--nodes"));
            }
            return *bridge;
        };

        if (*dims) {
            const auto table = dimension_table(ctx);
            if (format == "csv")
                doc << dimension_table_csv(table);
            else if (format == "text")
                for (const auto& [ps, n] : table.entries) doc << "R^" << ps.first << "_(" << ps.second << ") <= " << n << "\n";
            else
                doc << dimension_table_json(table).dump(2) << "\n";
        } else if (*theta_power_cmd) {
            doc << render_element(theta_power(ctx, power, get_bridge()), format);
        } else if (*fourier_cmd) {
            std::string text;
            if (in_path == "-") {
                text = read_all(in);
            } else {
                std::ifstream file(in_path);
                if (!file) throw ParseError("cannot open '" + in_path + "'");
                text = read_all(file);
            }
            const AnyElement x = parse_element(text, err);
            const JacobianContext& doc_ctx = std::visit([](const auto& e) -> const JacobianContext& { return e.context(); }, x);
            if (!(doc_ctx == ctx)) throw DomainError("document genus/gonality does not match --genus/--gonality");
            if (direction == "fwd") {
                const auto* n = std::get_if<NElement>(&x);
                if (!n) throw DomainError("--direction fwd expects a newton-side document");
                doc << render_element(fourier_forward(*n), format);
            } else {
                const auto* p = std::get_if<PElement>(&x);
                if (!p) throw DomainError("--direction bwd expects a pontryagin-side document");
                doc << render_element(fourier_backward(*p), format);
            }
        } else if (*expand_cmd) {
            doc << render_element(expand_ktuple(ctx, KTuple(parse_int_list(ktuple_text, "--ktuple"))), format);
        } else if (*intersect_cmd) {
            if (theta_exponent < 0) throw DomainError("--theta-exponent must be non-negative");
            PElement x = expand_ktuple(ctx, KTuple(parse_int_list(ktuple_text, "--ktuple")));
            for (int i = 0; i < theta_exponent; ++i) x = theta_mul(x, get_bridge());
            const Rational degree = intersection_number(x);
            if (format == "json")
                doc << Json{{"genus", genus}, {"theta_exponent", theta_exponent}, {"ktuple", parse_int_list(ktuple_text, "--ktuple")},
                            {"degree", degree.str()}}
                           .dump(2)
                    << "\n";
            else
                doc << degree.str() << "\n";
        } else if (*verify_cmd) {
            const auto results = run_suite(get_bridge(), suite);
            const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
            if (format == "json") {
                Json j{{"genus", genus}, {"suite", suite}, {"results", Json::array()}, {"passed", passed}};
                for (const auto& r : results) j["results"].push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                doc << j.dump(2) << "\n";
            } else if (format == "csv") {
                doc << "name,pass\n";
                for (const auto& r : results) doc << '"' << r.name << "\"," << (r.pass ? "true" : "false") << "\n";
            } else {
                for (const auto& r : results) doc << (r.pass ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
            }
            if (!passed) status = exit_code::verification_failed;
        } else if (*hyper_cmd || *trig_cmd) {
            const auto report = *hyper_cmd ? hyperelliptic_report(genus) : trigonal_report(genus);
            doc << report_json(report).dump(2) << "\n";
            if (!report.verdict) status = exit_code::verification_failed;
        } else if (*bound_cmd) {
            doc << generator_bound(genus) << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::domain;
    }

    if (out_path.empty()) {
        out << doc.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << out_path << "'\n";
            return exit_code::usage;
        }
        file << doc.str();
    }
    return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) { return run(args, std::cin, out, err); }

}  // namespace tautring

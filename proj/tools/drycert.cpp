#include <CLI11.hpp>

#include <drycert/io.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace drycert;

namespace {

DivClass parse_phi_option(const std::string& s) {
    std::vector<Rational> coords;
    std::string token;
    std::istringstream stream(s);
    while (std::getline(stream, token, ','))
        coords.push_back(io::parse_rational(io::json(token)));
    if (coords.empty()) throw std::invalid_argument("empty coefficient list: " + s);
    DivClass d = DivClass::zero(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) d.c[i] = coords[i];
    return d;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::string dumped(const io::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificate engine for DRY classes on elliptic Calabi-Yau threefolds"};
    app.require_subcommand(1);

    std::string base_name;
    std::string phi_str;
    std::string format = "json";
    std::string out_path;
    std::string in_path;
    long long N = 0;
    long long omega = 0;
    long long bound = -1;
    bool have_bound = false;

    const std::string base_help = "base surface (P2, F0, F1, dP1..dP8)";
    const std::string phi_help = "comma-separated coefficients, e.g. 7,8 or 12,-4,-4,-4";

    auto* cones = app.add_subcommand("cones", "print intersection data for a base surface");
    cones->add_option("base", base_name, base_help)->required();

    auto* check = app.add_subcommand("check-dry", "evaluate the DRY inequality for a candidate");
    check->add_option("base", base_name, base_help)->required();
    check->add_option("--phi", phi_str, phi_help)->required();
    check->add_option("--omega", omega, "fiber-degree coefficient")->required();
    check->add_option("--N", N, "twist scale")->required();
    check->add_option("--out", out_path, "write output here instead of stdout");

    auto* realize_cmd = app.add_subcommand("realize", "construct a witness for a candidate");
    realize_cmd->add_option("base", base_name, base_help)->required();
    realize_cmd->add_option("--phi", phi_str, phi_help)->required();
    realize_cmd->add_option("--omega", omega, "fiber-degree coefficient")->required();
    realize_cmd->add_option("--N", N, "twist scale")->required();
    realize_cmd->add_option("--out", out_path, "write output here instead of stdout");

    auto* verify_cmd =
        app.add_subcommand("verify", "re-audit a realize certificate from JSON");
    verify_cmd->add_option("--in", in_path, "certificate file (default: stdin)");
    verify_cmd->add_option("--out", out_path, "write output here instead of stdout");

    auto* census_cmd =
        app.add_subcommand("census", "enumerate unrealized DRY classes for a twist scale");
    census_cmd->add_option("base", base_name, base_help)->required();
    census_cmd->add_option("--N", N, "twist scale")->required();
    census_cmd->add_option("--bound", bound, "override the phi.c1 sweep bound")
        ->check(CLI::NonNegativeNumber);
    census_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    census_cmd->add_option("--out", out_path, "write output here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    have_bound = census_cmd->count("--bound") > 0;

    try {
        if (cones->parsed()) {
            write_output(dumped(io::base_json(parse_base(base_name))), out_path);
        } else if (check->parsed()) {
            const BaseSurface base = parse_base(base_name);
            const CandidateClass cand{parse_phi_option(phi_str), Int(omega), N};
            write_output(dumped(io::dry_json(base, cand, evaluate_dry(base, cand))), out_path);
        } else if (realize_cmd->parsed()) {
            const BaseSurface base = parse_base(base_name);
            const CandidateClass cand{parse_phi_option(phi_str), Int(omega), N};
            const Verdict v = realize(base, cand);
            write_output(dumped(io::verdict_json(base, cand, v)), out_path);
            if (v.kind == VerdictKind::Unsupported) return 3;
        } else if (verify_cmd->parsed()) {
            std::string text;
            if (in_path.empty()) {
                std::ostringstream buffer;
                buffer << std::cin.rdbuf();
                text = buffer.str();
            } else {
                std::ifstream in(in_path);
                if (!in) throw std::invalid_argument("cannot open input file: " + in_path);
                std::ostringstream buffer;
                buffer << in.rdbuf();
                text = buffer.str();
            }
            const io::json j = io::json::parse(text);
            const BaseSurface base = parse_base(j.at("base").get<std::string>());
            const CandidateClass cand{io::parse_div_class(j.at("phi")),
                                      io::parse_int(j.at("omega")),
                                      j.at("N").get<long long>()};
            const Witness w = io::parse_witness(j.at("witness"));
            io::json out;
            out["verified"] = verify_witness(base, w, cand);
            write_output(dumped(out), out_path);
        } else if (census_cmd->parsed()) {
            const BaseSurface base = parse_base(base_name);
            const std::optional<Int> override_bound =
                have_bound ? std::optional<Int>(Int(bound)) : std::nullopt;
            const CensusReport report = exception_census(N, base, override_bound);
            if (format == "csv")
                write_output(io::census_csv(report), out_path);
            else
                write_output(dumped(io::census_json(report)), out_path);
        }
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const io::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bfun/cli.hpp"

namespace {

std::optional<bfun::OracleBounds> parse_bounds_flag(const std::string& text) {
    if (text.empty()) return std::nullopt;
    unsigned vals[4];
    std::istringstream in(text);
    std::string part;
    for (int i = 0; i < 4; ++i) {
        if (!std::getline(in, part, ',')) throw CLI::ValidationError("--bounds needs ord,deg,sdeg,bdeg");
        vals[i] = static_cast<unsigned>(std::stoul(part));
    }
    return bfun::OracleBounds{vals[0], vals[1], vals[2], vals[3]};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact b-function toolkit: ansatz oracle, closed-form root bounds, and "
                 "multiplier-ideal cross-checks"};
    std::string input_file, output_file, format = "json", bounds_flag;
    unsigned ell_max = 0, cap = 0;
    bool have_ell = false, have_cap = false;
    app.add_option("--input", input_file, "Read the problem JSON from FILE instead of stdin");
    app.add_option("--output", output_file, "Write the report to FILE instead of stdout");
    app.add_option("--format", format, "Report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--ell-max", ell_max, "Override the candidate-set truncation depth")
        ->trigger_on_parse()
        ->each([&](const std::string&) { have_ell = true; });
    app.add_option("--bounds", bounds_flag, "Oracle bounds as \"ord,deg,sdeg,bdeg\"");
    app.add_option("--cap", cap, "Override the monomial exponent cap")
        ->trigger_on_parse()
        ->each([&](const std::string&) { have_cap = true; });
    CLI11_PARSE(app, argc, argv);

    std::string raw;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) {
            std::cerr << "error: cannot open " << input_file << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        raw = buf.str();
    } else {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        raw = buf.str();
    }

    bfun::Report report;
    try {
        bfun::Json doc = bfun::Json::parse(raw);
        bfun::ProblemSpec spec = bfun::parse_problem(doc);
        bfun::RunOverrides over;
        if (have_ell) over.ell_max = ell_max;
        if (have_cap) over.cap = cap;
        over.bounds = parse_bounds_flag(bounds_flag);
        report = bfun::run(spec, over);
    } catch (const bfun::SchemaError& e) {
        report.exit_code = 2;
        report.doc = bfun::Json{{"error", {{"type", "schema"}, {"message", e.what()}, {"field", e.field}}}};
        report.text = std::string("error (schema): ") + e.what() + "\n";
    } catch (const bfun::Json::parse_error& e) {
        report.exit_code = 2;
        report.doc = bfun::Json{{"error", {{"type", "schema"}, {"message", e.what()}, {"field", "$"}}}};
        report.text = std::string("error (schema): ") + e.what() + "\n";
    }

    std::string rendered =
        format == "json" ? report.doc.dump(2) + "\n" : report.text;
    if (!output_file.empty()) {
        std::ofstream out(output_file);
        if (!out) {
            std::cerr << "error: cannot open " << output_file << "\n";
            return 2;
        }
        out << rendered;
    } else {
        std::cout << rendered;
    }
    return report.exit_code;
}

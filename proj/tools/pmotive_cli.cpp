/* Copyright (C) 2026 The pmotive Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// pmotive: motivic Milnor fiber, spectrum and monodromy of a plane branch
// from its essential Puiseux exponents.
//
// Exit codes: 0 success, 1 invalid input or flags, 2 a verification check failed.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pmotive/report.hpp>

namespace {

struct Options {
    std::string exponents;
    std::string input;
    std::string output = "text";
    bool verify = false;
    bool quiet = false;
};

std::string render(const pmotive::RunReport& r, const std::string& format)
{
    if (format == "json")
        return pmotive::to_json(r).dump(2) + "\n";
    if (format == "latex")
        return pmotive::to_latex(r);
    return pmotive::to_text(r);
}

std::vector<std::string> read_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        lines.push_back(line);
    }
    return lines;
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Motivic Milnor fiber, Hodge spectrum and monodromy of an irreducible plane "
                 "curve singularity from its essential Puiseux exponents"};
    auto* exps_opt = app.add_option("--exponents", opt.exponents,
                                    "comma-separated essential exponents, e.g. 3/2,7/4,11/6");
    auto* input_opt = app.add_option("--input", opt.input,
                                     "file with one exponent list per line (batch mode)");
    exps_opt->excludes(input_opt);
    app.add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_flag("--verify", opt.verify, "run every cross-check; exit 2 if any fails");
    app.add_flag("--quiet", opt.quiet, "print nothing on success");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    const bool batch = input_opt->count() > 0;
    if (!batch && exps_opt->count() == 0) {
        std::cerr << "error: one of --exponents or --input is required\n";
        return 1;
    }

    std::vector<std::string> lines;
    try {
        lines = batch ? read_lines(opt.input) : std::vector<std::string>{opt.exponents};
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    std::vector<pmotive::RunReport> reports;
    reports.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            reports.push_back(pmotive::build_report(pmotive::parse_exponents(lines[i]), opt.verify));
        } catch (const pmotive::InvalidExponents& e) {
            std::cerr << "error: " << (batch ? "line " + std::to_string(i + 1) + ": " : "")
                      << e.what() << '\n';
            return 1;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }

    bool verified = true;
    for (const auto& r : reports)
        verified = verified && r.all_checks_pass();

    if (!opt.quiet) {
        if (batch && opt.output == "json") {
            pmotive::Json arr = pmotive::Json::array();
            for (const auto& r : reports)
                arr.push_back(pmotive::to_json(r));
            std::cout << arr.dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i > 0)
                    std::cout << '\n';
                std::cout << render(reports[i], opt.output);
            }
        }
    }

    if (!verified) {
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                if (!c.pass)
                    std::cerr << "verification failed [" << pmotive::to_string(r.exponents)
                              << "] " << c.name << ": " << c.detail << '\n';
        return 2;
    }
    return 0;
}

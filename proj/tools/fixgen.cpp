/*
   Copyright 2026 The hmdist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Converts fixture sources (.src) into canonical fixture files (.fix).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hmdist/fixtures.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonicalize hmdist fixture sources"};
    std::string source;
    std::string out;
    std::string check;
    app.add_option("source", source, "fixture source file (hmdist-source 1)")->required();
    auto* o = app.add_option("-o,--out", out, "write the canonical fixture here instead of stdout");
    app.add_option("--check", check, "compare against an existing .fix file; exit 1 if it differs")->excludes(o);
    CLI11_PARSE(app, argc, argv);
    try {
        std::string text = hmdist::FixtureSet::parse_source(read_file(source)).serialize();
        if (!check.empty()) {
            std::string have = hmdist::FixtureSet::load(check).serialize();
            if (have != read_file(check)) {
                std::cerr << check << ": not in canonical form\n";
                return 1;
            }
            if (have != text) {
                std::cerr << check << ": differs from " << source << "\n";
                return 1;
            }
            return 0;
        }
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out);
            f << text;
            if (!f) throw std::runtime_error("cannot write " + out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

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

#include "hmdist/paths.hpp"

#include <cstdlib>

namespace hmdist {

namespace fs = std::filesystem;

fs::path data_dir() {
    if (const char* env = std::getenv("HMDIST_DATA_DIR"); env && *env) return fs::path(env);
#ifdef HMDIST_SOURCE_DATA_DIR
    {
        std::error_code ec;
        fs::path p(HMDIST_SOURCE_DATA_DIR);
        if (fs::is_directory(p, ec)) return p;
    }
#endif
#ifdef HMDIST_INSTALL_DATA_DIR
    return fs::path(HMDIST_INSTALL_DATA_DIR);
#else
    return fs::path("data");
#endif
}

fs::path fixture_dir() {
    if (const char* env = std::getenv("HMDIST_FIXTURE_DIR"); env && *env) return fs::path(env);
    return data_dir() / "fixtures";
}

fs::path table_path(const char* name) { return data_dir() / "tables" / name; }

}  // namespace hmdist

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

#pragma once

#include <filesystem>

namespace hmdist {

/// Root of the shipped data (tables/, fixtures/). Resolution order: the
/// HMDIST_DATA_DIR environment variable, the source tree the library was
/// built from, then the install prefix.
std::filesystem::path data_dir();

/// Fixture directory: HMDIST_FIXTURE_DIR if set, else data_dir()/fixtures.
std::filesystem::path fixture_dir();

std::filesystem::path table_path(const char* name);

}  // namespace hmdist

// Copyright 2026 The natprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NATPROG_TESTS_SUPPORT_CORPUS_HPP_
#define NATPROG_TESTS_SUPPORT_CORPUS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace natprog::testing {

std::filesystem::path test_data_dir();

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);
std::vector<std::string> read_lines(const std::filesystem::path& path);

struct CorpusCase {
  std::string name;
  std::string source;
  std::vector<std::string> inputs;
  std::vector<std::string> expected_outputs;
};

// Stems of tests/corpus/*.mpl, sorted.
std::vector<std::string> corpus_names();
CorpusCase load_case(const std::string& name);
std::filesystem::path golden_path(const std::string& name);

// Absolute path of the natprog executable under test.
std::string cli_path();

// True when a C# compiler is on PATH.
bool csharp_toolchain_available();

struct ExternalRun {
  int exit_code = -1;
  std::vector<std::string> stdout_lines;
};

// Compiles C# source with whichever toolchain is present and runs it with the
// given stdin lines. Nullopt when compilation fails or no toolchain exists.
std::optional<ExternalRun> run_csharp(const std::string& source,
                                      const std::vector<std::string>& inputs);

// Runs a shell command with stdin taken from a file. Exit code plus stdout.
ExternalRun run_command(const std::string& command, const std::string& stdin_text = {});

}  // namespace natprog::testing

#endif  // NATPROG_TESTS_SUPPORT_CORPUS_HPP_

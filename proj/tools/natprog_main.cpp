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

// natprog command-line driver.
//
//   natprog compile <file.mpl> [--emit <out.cs>]
//   natprog run <file.mpl> [--input <file>] [--step-limit N]
//   natprog generate --template <id> --slots <json> [--append-to <file.mpl>]
//   natprog templates
//   natprog serve [--port N] [--host H] [--static-dir DIR]
//
// Exit codes: 0 success, 1 diagnostics reported, 2 usage or I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "natprog/diagnostic.hpp"
#include "natprog/pipeline.hpp"
#include "natprog/service.hpp"
#include "natprog/templates.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text,
                std::ios::openmode mode = std::ios::trunc) {
  std::ofstream out(path, std::ios::binary | std::ios::out | mode);
  if (!out) throw IoError{"cannot write '" + path + "'"};
  out << text;
  if (!out) throw IoError{"error writing '" + path + "'"};
}

void report(const std::vector<natprog::Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    std::cerr << natprog::format_diagnostic(d) << '\n';
  }
}

// Reads Read values line by line from a stream, so interactive use works.
class StreamInput : public natprog::InputProvider {
 public:
  StreamInput(std::istream& in, bool interactive)
      : in_(in), interactive_(interactive) {}

  std::optional<std::string> next(
      const std::optional<std::string>& prompt) override {
    if (interactive_ && prompt) std::cerr << *prompt << ' ' << std::flush;
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

 private:
  std::istream& in_;
  bool interactive_;
};

int cmd_compile(const std::string& file, const std::string& emit) {
  const natprog::CompileResponse response =
      natprog::compile_source(read_file(file));
  report(response.diagnostics);
  if (!response.ok) return kExitDiagnostics;
  if (emit.empty()) {
    std::cout << *response.target_source;
  } else {
    write_file(emit, *response.target_source);
  }
  return kExitOk;
}

int cmd_run(const std::string& file, const std::string& input_file,
            std::uint64_t step_limit) {
  const std::string source = read_file(file);
  std::ifstream input_stream;
  if (!input_file.empty()) {
    input_stream.open(input_file, std::ios::binary);
    if (!input_stream) throw IoError{"cannot open '" + input_file + "'"};
  }
  StreamInput inputs(input_file.empty() ? std::cin : input_stream,
                     input_file.empty() && isatty(STDIN_FILENO));
  natprog::RunOptions options;
  options.step_limit = step_limit;
  options.on_output = [](const std::string& line) {
    std::cout << line << '\n' << std::flush;
  };
  const natprog::RunResponse response =
      natprog::run_source(source, inputs, options);
  report(response.diagnostics);
  if (response.runtime_error) {
    std::cerr << natprog::format_diagnostic(*response.runtime_error) << '\n';
  }
  return response.ok ? kExitOk : kExitDiagnostics;
}

int cmd_generate(const std::string& template_id, const std::string& slots_json,
                 const std::string& append_to) {
  nlohmann::json slots = nlohmann::json::parse(slots_json, nullptr, false);
  if (slots.is_discarded() || !slots.is_object()) {
    std::cerr << "error: --slots must be a JSON object\n";
    return kExitUsage;
  }
  natprog::TemplateInstance instance;
  try {
    instance = nlohmann::json{{"templateId", template_id}, {"slots", slots}}
                   .get<natprog::TemplateInstance>();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::string context;
  if (!append_to.empty() && std::filesystem::exists(append_to)) {
    context = read_file(append_to);
  }
  const natprog::GenerateResponse response =
      natprog::generate(instance, context);
  report(response.diagnostics);
  if (!response.ok) return kExitDiagnostics;
  std::cout << *response.text << '\n';
  if (!append_to.empty()) {
    std::string addition = *response.text + "\n";
    if (!context.empty() && context.back() != '\n') addition.insert(0, "\n");
    write_file(append_to, addition, std::ios::app);
  }
  return kExitOk;
}

int cmd_serve(std::optional<int> port, const std::string& host,
              const std::string& static_dir) {
  int chosen = natprog::kDefaultPort;
  if (const char* env = std::getenv("NATPROG_PORT")) {
    try {
      chosen = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: NATPROG_PORT is not a number\n";
      return kExitUsage;
    }
  }
  if (port) chosen = *port;
  std::cerr << "natprog: serving on http://" << host << ':' << chosen << '\n';
  std::optional<std::string> dir;
  if (!static_dir.empty()) dir = static_dir;
  if (!natprog::serve(host, chosen, dir)) {
    std::cerr << "error: cannot listen on " << host << ':' << chosen << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"natprog: template-driven natural programming toolchain"};
  app.require_subcommand(1);

  std::string file;
  std::string emit;
  auto* compile = app.add_subcommand("compile", "Check a program and emit C#");
  compile->add_option("file", file, "Source file (.mpl)")->required();
  compile->add_option("--emit", emit, "Write the C# output here");

  std::string input_file;
  std::uint64_t step_limit = natprog::kDefaultStepLimit;
  auto* run = app.add_subcommand("run", "Run a program with the interpreter");
  run->add_option("file", file, "Source file (.mpl)")->required();
  run->add_option("--input", input_file, "Read values, one per line");
  run->add_option("--step-limit", step_limit, "Execution step budget")
      ->check(CLI::PositiveNumber);

  std::string template_id;
  std::string slots_json;
  std::string append_to;
  auto* gen = app.add_subcommand("generate", "Fill a template to make a sentence");
  gen->add_option("--template", template_id, "Template id")->required();
  gen->add_option("--slots", slots_json, "Slot values as a JSON object")
      ->required();
  gen->add_option("--append-to", append_to,
                  "Program file to validate against and append to");

  auto* templates = app.add_subcommand("templates", "Print the template catalog");

  std::optional<int> port;
  std::string host = "127.0.0.1";
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Start the JSON API service");
  serve->add_option("--port", port, "Port (overrides NATPROG_PORT)")
      ->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Interface to bind");
  serve->add_option("--static-dir", static_dir, "Serve UI files from here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compile->parsed()) return cmd_compile(file, emit);
    if (run->parsed()) return cmd_run(file, input_file, step_limit);
    if (gen->parsed()) return cmd_generate(template_id, slots_json, append_to);
    if (templates->parsed()) {
      std::cout << natprog::catalog_json(natprog::catalog()).dump(2) << '\n';
      return kExitOk;
    }
    if (serve->parsed()) return cmd_serve(port, host, static_dir);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

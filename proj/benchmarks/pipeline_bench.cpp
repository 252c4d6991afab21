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

#include <benchmark/benchmark.h>

#include <string>

#include "natprog/codegen.hpp"
#include "natprog/interpreter.hpp"
#include "natprog/lexer.hpp"
#include "natprog/nlg.hpp"
#include "natprog/parser.hpp"
#include "natprog/pipeline.hpp"
#include "natprog/semantics.hpp"

namespace {

constexpr const char* kHeader =
    "Declare a variable called N of type Number with initial value 1.\n"
    "Declare a variable called Total of type Number.\n"
    "Declare a variable called Label of type String.\n"
    "Declare an array called Seen of type Number with size 100.\n";

constexpr const char* kBody =
    "If N % 15 is Equal to 0 then\n"
    "    Set Label to \"FizzBuzz\".\n"
    "Otherwise if N % 3 is Equal to 0 Or N % 5 is Equal to 0 then\n"
    "    Set Label to \"Fizz\" & N.\n"
    "Otherwise\n"
    "    Set Label to N & \"\".\n"
    "End of condition.\n"
    "Set element N % 100 + 1 of Seen to (Total + N * 2) / 3 - -N.\n"
    "Set Total to (Total + element N % 100 + 1 of Seen) % 1000.\n"
    "Set N to N + 1.\n";

// A straight-line program with `blocks` copies of the body.
std::string straight_program(int blocks) {
  std::string s = kHeader;
  for (int i = 0; i < blocks; ++i) s += kBody;
  return s;
}

// The same body inside a counted loop.
std::string looping_program(int iterations) {
  std::string s = kHeader;
  s += "Repeat " + std::to_string(iterations) + " times\n";
  s += kBody;
  s += "End of repeat.\nDisplay Total on the screen.\n";
  return s;
}

natprog::CheckedProgram checked(const std::string& source) {
  return *natprog::check_source(source).program;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string source = straight_program(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(natprog::tokenize(source));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_Tokenize)->RangeMultiplier(8)->Range(1, 512);

void BM_Parse(benchmark::State& state) {
  const std::string source = straight_program(static_cast<int>(state.range(0)));
  const natprog::LexOutput lexed = natprog::tokenize(source);
  for (auto _ : state) benchmark::DoNotOptimize(natprog::parse_program(lexed.tokens));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_Parse)->RangeMultiplier(8)->Range(1, 512);

void BM_Analyze(benchmark::State& state) {
  const std::string source = straight_program(static_cast<int>(state.range(0)));
  const natprog::Program parsed = natprog::parse_source(source).program;
  for (auto _ : state) benchmark::DoNotOptimize(natprog::analyze(parsed));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(8)->Range(1, 512);

void BM_Realize(benchmark::State& state) {
  const natprog::Program parsed =
      natprog::parse_source(straight_program(static_cast<int>(state.range(0)))).program;
  for (auto _ : state) benchmark::DoNotOptimize(natprog::realize_program(parsed));
}
BENCHMARK(BM_Realize)->RangeMultiplier(8)->Range(1, 512);

void BM_EmitTarget(benchmark::State& state) {
  const natprog::CheckedProgram program =
      checked(straight_program(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(natprog::emit_target(program));
}
BENCHMARK(BM_EmitTarget)->RangeMultiplier(8)->Range(1, 512);

void BM_Interpret(benchmark::State& state) {
  const natprog::CheckedProgram program =
      checked(looping_program(static_cast<int>(state.range(0))));
  std::uint64_t steps = 0;
  for (auto _ : state) {
    natprog::ScriptedInput inputs({});
    const natprog::RunResult result = natprog::run(program, inputs);
    if (!result.ok()) state.SkipWithError("runtime error");
    steps = result.steps_used;
  }
  state.counters["steps"] = static_cast<double>(steps);
  state.counters["steps_per_s"] = benchmark::Counter(
      static_cast<double>(steps), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Interpret)->RangeMultiplier(10)->Range(10, 100000);

void BM_CompileEndToEnd(benchmark::State& state) {
  const std::string source = straight_program(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(natprog::compile_source(source));
}
BENCHMARK(BM_CompileEndToEnd)->RangeMultiplier(8)->Range(1, 512);

}  // namespace

BENCHMARK_MAIN();

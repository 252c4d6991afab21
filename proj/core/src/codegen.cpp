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

#include "natprog/codegen.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "natprog/number_text.hpp"

namespace natprog {
namespace {

constexpr std::string_view kHeader = R"cs(// Generated by natprog. Do not edit.
using System;
using System.Globalization;
using System.Text.RegularExpressions;

public static class Program
{
    public static int Main()
    {
        try
        {
            Run();
            return 0;
        }
        catch (NatRuntimeError e)
        {
            Console.Out.Flush();
            Console.Error.WriteLine("ERROR " + e.Code + ": " + e.Message + ".");
            return 1;
        }
    }

    static void Run()
    {
)cs";

constexpr std::string_view kFooter = R"cs(    }
}

public sealed class NatRuntimeError : Exception
{
    public NatRuntimeError(string code, string message) : base(message)
    {
        Code = code;
    }

    public string Code { get; }
}

public static class Rt
{
    static readonly Regex NumberInput = new Regex(@"^[+-]?[0-9]+(\.[0-9]+)?$");

    public static double Num(double value)
    {
        if (double.IsNaN(value) || double.IsInfinity(value))
        {
            throw new NatRuntimeError("R101", "arithmetic result is not a finite number");
        }
        return value;
    }

    public static double Div(double a, double b)
    {
        if (b == 0)
        {
            throw new NatRuntimeError("R101", "division by zero");
        }
        return Num(a / b);
    }

    // Sign follows the dividend, as in C fmod.
    public static double Mod(double a, double b)
    {
        if (b == 0)
        {
            throw new NatRuntimeError("R101", "remainder by zero");
        }
        return Num(a % b);
    }

    // Checks a 1-based index and returns the 0-based position.
    public static int Index<T>(T[] array, double index)
    {
        if (Math.Floor(index) != index || index < 1 || index > array.Length)
        {
            throw new NatRuntimeError("R102", "element " + Str(index) + " does not exist (valid: 1 to " + array.Length + ")");
        }
        return (int)index - 1;
    }

    public static double Count(double count)
    {
        if (count < 0 || Math.Floor(count) != count)
        {
            throw new NatRuntimeError("R104", "repeat count " + Str(count) + " is not a whole number of zero or more");
        }
        return count;
    }

    public static double[] Numbers(int size)
    {
        return new double[size];
    }

    public static string[] Strings(int size)
    {
        string[] values = new string[size];
        for (int i = 0; i < size; i++)
        {
            values[i] = "";
        }
        return values;
    }

    public static string Str(string text)
    {
        return text;
    }

    // Shortest round-trip digits, always written out in plain decimal.
    public static string Str(double value)
    {
        if (value == 0)
        {
            return "0";
        }
        string r = value.ToString("R", CultureInfo.InvariantCulture);
        int e = r.IndexOfAny(new[] { 'E', 'e' });
        if (e < 0)
        {
            return r;
        }
        bool negative = r[0] == '-';
        int start = negative ? 1 : 0;
        string mantissa = r.Substring(start, e - start);
        int exponent = int.Parse(r.Substring(e + 1), NumberStyles.AllowLeadingSign, CultureInfo.InvariantCulture);
        int dot = mantissa.IndexOf('.');
        string digits = dot < 0 ? mantissa : mantissa.Remove(dot, 1);
        int point = (dot < 0 ? mantissa.Length : dot) + exponent;
        string body;
        if (point <= 0)
        {
            body = "0." + new string('0', -point) + digits;
        }
        else if (point >= digits.Length)
        {
            body = digits + new string('0', point - digits.Length);
        }
        else
        {
            body = digits.Substring(0, point) + "." + digits.Substring(point);
        }
        return negative ? "-" + body : body;
    }

    public static double ReadNumber(string prompt)
    {
        string line = ReadLine(prompt);
        string text = line.Trim(' ', '\t', '\r', '\n');
        double value;
        if (!NumberInput.IsMatch(text) ||
            !double.TryParse(text, NumberStyles.AllowLeadingSign | NumberStyles.AllowDecimalPoint, CultureInfo.InvariantCulture, out value) ||
            double.IsInfinity(value))
        {
            throw new NatRuntimeError("R103", "input '" + line + "' is not a number");
        }
        return value;
    }

    public static string ReadText(string prompt)
    {
        return ReadLine(prompt);
    }

    static string ReadLine(string prompt)
    {
        if (prompt != null)
        {
            Console.Error.Write(prompt + " ");
        }
        string line = Console.ReadLine();
        if (line == null)
        {
            throw new NatRuntimeError("R103", "no input available");
        }
        return line;
    }
}
)cs";

constexpr int kIndentWidth = 4;

class Emitter {
 public:
  explicit Emitter(const CheckedProgram& program) : program_(program) {}

  std::string run() {
    out_ = std::string(kHeader);
    hoist_symbols();
    for (const auto& s : program_.program.statements) statement(s, 2);
    out_ += kFooter;
    return std::move(out_);
  }

 private:
  void line(int depth, std::string_view text) {
    out_.append(static_cast<std::size_t>(depth * kIndentWidth), ' ');
    out_ += text;
    out_ += '\n';
  }

  const Symbol& symbol(std::string_view name) const {
    const Symbol* s = program_.symbols.find(name);
    if (s == nullptr) {
      throw std::logic_error("emit_target: unresolved name " + std::string(name));
    }
    return *s;
  }

  std::string var(std::string_view name) const {
    return "v_" + symbol(name).spelling;
  }

  static std::string array_init(BaseType element, std::int64_t size) {
    return std::string(element == BaseType::kNumber ? "Rt.Numbers(" : "Rt.Strings(") +
           std::to_string(size) + ")";
  }

  static std::string default_value(BaseType type) {
    return type == BaseType::kNumber ? "0.0" : "\"\"";
  }

  static std::string cs_type(BaseType type) {
    return type == BaseType::kNumber ? "double" : "string";
  }

  // All symbols live for the whole run, whatever block declared them.
  void hoist_symbols() {
    std::vector<const Symbol*> ordered;
    for (const auto& [key, s] : program_.symbols.entries()) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(), [](const Symbol* a, const Symbol* b) {
      return a->declaration_index < b->declaration_index;
    });
    for (const Symbol* s : ordered) {
      if (s->type.is_array()) {
        line(2, cs_type(s->type.element) + "[] v_" + s->spelling + " = " +
                    array_init(s->type.element, *s->type.array_size) + ";");
      } else {
        line(2, cs_type(s->type.element) + " v_" + s->spelling + " = " +
                    default_value(s->type.element) + ";");
      }
    }
    if (!ordered.empty()) out_ += '\n';
  }

  std::string number_literal(double value) const {
    std::string text = format_number(value);
    if (text.find('.') == std::string::npos) text += ".0";
    return text;
  }

  std::string element_access(std::string_view array, const Expr& index) {
    const std::string name = var(array);
    return name + "[Rt.Index(" + name + ", " + expr(index) + ")]";
  }

  std::string expr(const Expr& e) {
    return std::visit(
        [this, &e](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, NumberLit>) {
            return number_literal(n.value);
          } else if constexpr (std::is_same_v<T, StringLit>) {
            return csharp_string_literal(n.value);
          } else if constexpr (std::is_same_v<T, VarRef>) {
            return var(n.name);
          } else if constexpr (std::is_same_v<T, ElementRef>) {
            return element_access(n.array, *n.index);
          } else if constexpr (std::is_same_v<T, Negate>) {
            return "(-" + expr(*n.operand) + ")";
          } else if constexpr (std::is_same_v<T, Binary>) {
            const std::string lhs = expr(*n.lhs);
            const std::string rhs = expr(*n.rhs);
            switch (n.op) {
              case BinaryOp::kAdd: return "Rt.Num(" + lhs + " + " + rhs + ")";
              case BinaryOp::kSubtract: return "Rt.Num(" + lhs + " - " + rhs + ")";
              case BinaryOp::kMultiply: return "Rt.Num(" + lhs + " * " + rhs + ")";
              case BinaryOp::kDivide: return "Rt.Div(" + lhs + ", " + rhs + ")";
              case BinaryOp::kRemainder: return "Rt.Mod(" + lhs + ", " + rhs + ")";
              case BinaryOp::kConcat:
                return "(Rt.Str(" + lhs + ") + Rt.Str(" + rhs + "))";
            }
            return "";
          } else if constexpr (std::is_same_v<T, Comparison>) {
            static constexpr std::string_view kOps[] = {">", "<", ">=", "<=", "==", "!="};
            return "(" + expr(*n.lhs) + " " +
                   std::string(kOps[static_cast<int>(n.op)]) + " " + expr(*n.rhs) +
                   ")";
          } else {
            return "(" + expr(*n.lhs) +
                   (n.op == LogicalOp::kAnd ? " && " : " || ") + expr(*n.rhs) + ")";
          }
        },
        e.node);
  }

  std::string target(const LValue& lv) {
    return lv.is_element() ? element_access(lv.name, *lv.index) : var(lv.name);
  }

  void block(const Block& body, int depth) {
    line(depth, "{");
    for (const auto& s : body) statement(s, depth + 1);
    line(depth, "}");
  }

  void statement(const Statement& s, int depth) {
    std::visit(
        [this, depth](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, DeclareVariable>) {
            line(depth, var(n.name) + " = " +
                            (n.initial ? expr(*n.initial) : default_value(n.type)) +
                            ";");
          } else if constexpr (std::is_same_v<T, DeclareArray>) {
            line(depth, var(n.name) + " = " + array_init(n.element_type, n.size) + ";");
          } else if constexpr (std::is_same_v<T, Assignment>) {
            const std::string lhs = target(n.target);
            line(depth, lhs + " = " + expr(*n.value) + ";");
          } else if constexpr (std::is_same_v<T, Display>) {
            const bool text = program_.type_of(*n.value) == BaseType::kString;
            const std::string value = expr(*n.value);
            line(depth, "Console.WriteLine(" + (text ? value : "Rt.Str(" + value + ")") +
                            ");");
          } else if constexpr (std::is_same_v<T, Read>) {
            const bool number =
                symbol(n.target.name).type.element == BaseType::kNumber;
            const std::string prompt =
                n.prompt ? csharp_string_literal(*n.prompt) : "null";
            const std::string lhs = target(n.target);
            line(depth, lhs + " = " + (number ? "Rt.ReadNumber(" : "Rt.ReadText(") +
                            prompt + ");");
          } else if constexpr (std::is_same_v<T, If>) {
            for (std::size_t i = 0; i < n.arms.size(); ++i) {
              line(depth, std::string(i == 0 ? "if " : "else if ") +
                              expr(*n.arms[i].condition));
              block(n.arms[i].body, depth);
            }
            if (n.otherwise) {
              line(depth, "else");
              block(*n.otherwise, depth);
            }
          } else if constexpr (std::is_same_v<T, RepeatWhile>) {
            line(depth, "while " + expr(*n.condition));
            block(n.body, depth);
          } else if constexpr (std::is_same_v<T, RepeatTimes>) {
            const std::string id = std::to_string(++counter_);
            line(depth, "for (double i_" + id + " = 0, n_" + id + " = Rt.Count(" +
                            expr(*n.count) + "); i_" + id + " < n_" + id + "; i_" +
                            id + "++)");
            block(n.body, depth);
          } else {
            const std::string temp = "selected_" + std::to_string(++counter_);
            line(depth, "{");
            line(depth + 1, "var " + temp + " = " + expr(*n.scrutinee) + ";");
            for (std::size_t i = 0; i < n.cases.size(); ++i) {
              line(depth + 1, std::string(i == 0 ? "if (" : "else if (") + temp +
                                  " == " + expr(*n.cases[i].label) + ")");
              block(n.cases[i].body, depth + 1);
            }
            if (n.other) {
              line(depth + 1, "else");
              block(*n.other, depth + 1);
            }
            line(depth, "}");
          }
        },
        s.node);
  }

  const CheckedProgram& program_;
  std::string out_;
  int counter_ = 0;
};

}  // namespace

std::string csharp_string_literal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    const auto byte = static_cast<unsigned char>(c);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (byte < 0x20 || byte == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", byte);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

TargetUnit emit_target(const CheckedProgram& program) {
  return TargetUnit{Emitter(program).run(), "Program.Main"};
}

}  // namespace natprog

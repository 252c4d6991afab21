// Generated by natprog. Do not edit.
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
        string[] v_Items = Rt.Strings(3);
        double[] v_Stock = Rt.Numbers(3);
        double v_Index = 0.0;
        string v_Wanted = "";
        double v_Found = 0.0;

        v_Items = Rt.Strings(3);
        v_Stock = Rt.Numbers(3);
        v_Index = 1.0;
        v_Wanted = "";
        v_Found = 0.0;
        v_Items[Rt.Index(v_Items, 1.0)] = "pen";
        v_Items[Rt.Index(v_Items, 2.0)] = "ink";
        v_Items[Rt.Index(v_Items, 3.0)] = "pad";
        v_Stock[Rt.Index(v_Stock, 1.0)] = 4.0;
        v_Stock[Rt.Index(v_Stock, 2.0)] = 0.0;
        v_Stock[Rt.Index(v_Stock, 3.0)] = 12.0;
        v_Wanted = Rt.ReadText("Item:");
        while ((v_Index <= 3.0) && (v_Found == 0.0))
        {
            if (v_Items[Rt.Index(v_Items, v_Index)] == v_Wanted)
            {
                v_Found = v_Index;
            }
            v_Index = Rt.Num(v_Index + 1.0);
        }
        if ((v_Found == 0.0) || (v_Stock[Rt.Index(v_Stock, v_Found)] == 0.0))
        {
            Console.WriteLine((Rt.Str(v_Wanted) + Rt.Str(" is not available")));
        }
        else
        {
            {
                var selected_1 = v_Stock[Rt.Index(v_Stock, v_Found)];
                if (selected_1 == 1.0)
                {
                    Console.WriteLine((Rt.Str("last ") + Rt.Str(v_Wanted)));
                }
                else
                {
                    Console.WriteLine((Rt.Str((Rt.Str(v_Stock[Rt.Index(v_Stock, v_Found)]) + Rt.Str(" x "))) + Rt.Str(v_Wanted)));
                }
            }
        }
    }
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

#pragma once
#ifndef FROBENIUS_TOOLS_CLI_APP_HPP
#define FROBENIUS_TOOLS_CLI_APP_HPP

// Command dispatch for the `frobenius` executable, kept in a header so the
// tests can drive it in-process with string streams.

#include <frobenius/all.hpp>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

namespace frobenius::cli {

enum class OutputFormat { Text, Csv, Json, Svg };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUnexpected = 1;
inline constexpr int kValidation = 2;
inline constexpr int kOverflow = 3;
inline constexpr int kInvariant = 4;
}  // namespace exit_code

using Json = nlohmann::ordered_json;

/// Strict decimal parse: optional '-', then digits only. No '+', no
/// whitespace, no exponent, no hex.
inline Int parse_decimal(const std::string& name, const std::string& text)
{
    const bool digits_ok = !text.empty() && text != "-" &&
                           std::all_of(text.begin() + (text.front() == '-' ? 1 : 0), text.end(),
                                       [](char c) { return c >= '0' && c <= '9'; });
    if (!digits_ok) {
        throw InvalidArgument(name + " must be a decimal integer, got '" + text + "'");
    }
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw OverflowError(name + " = " + text + " does not fit in 64 bits");
    }
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidArgument(name + " must be a decimal integer, got '" + text + "'");
    }
    return value;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << csv_field(fields[i]);
    }
    out << '\n';
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
inline void write_text_columns(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) {
                line.append(widths[i] - row[i].size() + 2, ' ');
            }
        }
        out << line << '\n';
    }
}

inline Json point_json(Int x, Int y) { return Json{{"x", x}, {"y", y}}; }

/// Parsed command line shared by every subcommand.
struct Invocation {
    OutputFormat format = OutputFormat::Text;
    bool format_given = false;
    bool verbose = false;
    std::vector<std::string> operands;
    Int width_px = 800;
    Int height_px = 600;
};

class Commands {
public:
    Commands(const Invocation& inv, std::ostream& out) : inv_(inv), out_(out) {}

    void frobenius(const CoinPair& pair)
    {
        const auto f = frobenius_number(pair);
        std::optional<IntPair> certificate;
        if (f && inv_.verbose) {
            certificate = canonical_solution(pair, *f);
        }
        switch (inv_.format) {
        case OutputFormat::Json: {
            Json j{{"a", pair.a()}, {"b", pair.b()}, {"frobenius", f ? Json(*f) : Json(nullptr)}};
            if (certificate) {
                j["certificate"] = point_json(certificate->x, certificate->y);
            }
            out_ << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            write_csv_row(out_, {"a", "b", "frobenius"});
            write_csv_row(out_, {std::to_string(pair.a()), std::to_string(pair.b()), f ? std::to_string(*f) : ""});
            break;
        default:
            out_ << (f ? std::to_string(*f) : "none") << '\n';
            if (certificate) {
                out_ << "certificate x=" << certificate->x << " y=" << certificate->y << '\n';
            }
        }
    }

    void check(const CoinPair& pair, Int d)
    {
        const MembershipVerdict v = is_representable(pair, d);
        const IntPair shown = v.representable ? IntPair{v.witness->x, v.witness->y} : *v.certificate;
        switch (inv_.format) {
        case OutputFormat::Json:
            out_ << Json{{"a", pair.a()},
                         {"b", pair.b()},
                         {"d", d},
                         {"representable", v.representable},
                         {"witness", v.witness ? point_json(shown.x, shown.y) : Json(nullptr)},
                         {"certificate", v.certificate ? point_json(shown.x, shown.y) : Json(nullptr)}}
                        .dump(2)
                 << '\n';
            break;
        case OutputFormat::Csv:
            write_csv_row(out_, {"d", "representable", "x", "y"});
            write_csv_row(out_, {std::to_string(d), v.representable ? "true" : "false", std::to_string(shown.x),
                                 std::to_string(shown.y)});
            break;
        default:
            if (v.representable) {
                out_ << "representable; witness x=" << shown.x << " y=" << shown.y << '\n';
            } else {
                out_ << "not representable; certificate x=" << shown.x << " y=" << shown.y << '\n';
            }
        }
    }

    void count(const CoinPair& pair, Int d)
    {
        const Int n = count_representations(pair, d);
        switch (inv_.format) {
        case OutputFormat::Json:
            out_ << Json{{"a", pair.a()}, {"b", pair.b()}, {"d", d}, {"count", n}}.dump(2) << '\n';
            break;
        case OutputFormat::Csv:
            write_csv_row(out_, {"d", "count"});
            write_csv_row(out_, {std::to_string(d), std::to_string(n)});
            break;
        default:
            out_ << n << '\n';
        }
    }

    void gaps(const CoinPair& pair)
    {
        const auto g = ::frobenius::gaps(pair);
        switch (inv_.format) {
        case OutputFormat::Json:
            out_ << Json{{"a", pair.a()}, {"b", pair.b()}, {"gaps", g}}.dump(2) << '\n';
            break;
        case OutputFormat::Csv:
            write_csv_row(out_, {"gap"});
            for (Int d : g) {
                write_csv_row(out_, {std::to_string(d)});
            }
            break;
        default: {
            std::string line;
            for (Int d : g) {
                line += (line.empty() ? "" : " ") + std::to_string(d);
            }
            out_ << line << '\n';
            if (inv_.verbose) {
                out_ << "count=" << g.size() << '\n';
            }
        }
        }
    }

    void table(const CoinPair& pair, Int d_max)
    {
        const auto rows = solution_table(pair, d_max);
        switch (inv_.format) {
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const auto& r : rows) {
                if (r.impossible()) {
                    arr.push_back(Json{{"x", nullptr}, {"y", nullptr}, {"d", r.d}, {"equation", ""},
                                       {"note", "Impossible"}});
                } else {
                    arr.push_back(Json{{"x", r.representation->x},
                                       {"y", r.representation->y},
                                       {"d", r.d},
                                       {"equation", equation_string(pair, *r.representation, r.d)},
                                       {"note", ""}});
                }
            }
            out_ << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            write_csv_row(out_, {"x", "y", "d", "equation", "note"});
            for (const auto& r : rows) {
                if (r.impossible()) {
                    write_csv_row(out_, {"", "", std::to_string(r.d), "", "Impossible"});
                } else {
                    write_csv_row(out_, {std::to_string(r.representation->x), std::to_string(r.representation->y),
                                         std::to_string(r.d), equation_string(pair, *r.representation, r.d), ""});
                }
            }
            break;
        default: {
            std::vector<std::vector<std::string>> text{{"x", "y", "d", "equation", "note"}};
            for (const auto& r : rows) {
                if (r.impossible()) {
                    text.push_back({"-", "-", std::to_string(r.d), "-", "Impossible"});
                } else {
                    text.push_back({std::to_string(r.representation->x), std::to_string(r.representation->y),
                                    std::to_string(r.d), equation_string(pair, *r.representation, r.d), "-"});
                }
            }
            write_text_columns(out_, text);
        }
        }
    }

    void plot(const CoinPair& pair, Int d_max)
    {
        out_ << render_plot_svg(pair, d_max, PlotOptions{inv_.width_px, inv_.height_px});
    }

    void pick(const CoinPair& pair)
    {
        const PickAudit audit = pick_audit(frobenius_parallelogram(pair));
        switch (inv_.format) {
        case OutputFormat::Json:
            out_ << Json{{"a", pair.a()},
                         {"b", pair.b()},
                         {"area_twice", audit.area_twice},
                         {"boundary_count", audit.boundary_count},
                         {"interior_count", audit.interior_count},
                         {"pick_holds", audit.pick_holds}}
                        .dump(2)
                 << '\n';
            break;
        case OutputFormat::Csv:
            write_csv_row(out_, {"area_twice", "boundary_count", "interior_count", "pick_holds"});
            write_csv_row(out_, {std::to_string(audit.area_twice), std::to_string(audit.boundary_count),
                                 std::to_string(audit.interior_count), audit.pick_holds ? "true" : "false"});
            break;
        default: {
            // The parallelogram's doubled area is always even; keep the half anyway.
            const std::string area = std::to_string(audit.area_twice / 2) + (audit.area_twice % 2 ? ".5" : "");
            out_ << "area=" << area << " B=" << audit.boundary_count << " I=" << audit.interior_count
                 << " pick=" << (audit.pick_holds ? "ok" : "FAIL") << '\n';
        }
        }
    }

    void chain(const CoinPair& pair, Int d_max)
    {
        const auto steps = inductive_chain(pair, d_max);
        switch (inv_.format) {
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const auto& s : steps) {
                arr.push_back(Json{{"d", s.d},
                                   {"x", s.representation.x},
                                   {"y", s.representation.y},
                                   {"added", to_string(s.added)}});
            }
            out_ << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            write_csv_row(out_, {"d", "x", "y", "added"});
            for (const auto& s : steps) {
                write_csv_row(out_, {std::to_string(s.d), std::to_string(s.representation.x),
                                     std::to_string(s.representation.y), to_string(s.added)});
            }
            break;
        default:
            if (inv_.verbose) {
                const auto units = minimal_unit_expressions(pair);
                out_ << "# first=(" << units.first.x << ", " << units.first.y << ") second=(" << units.second.x
                     << ", " << units.second.y << ")\n";
            }
            for (const auto& s : steps) {
                out_ << s.d << ' ' << s.representation.x << ' ' << s.representation.y << ' ' << to_string(s.added)
                     << '\n';
            }
        }
    }

    void solve(const CoinPair& pair, Int d)
    {
        const SolutionFamily family = solve_any(pair, d);
        const IntPair canonical = canonical_solution(pair, d);
        const auto solutions = nonneg_solutions(pair, d);
        switch (inv_.format) {
        case OutputFormat::Json: {
            Json list = Json::array();
            for (const auto& r : solutions) {
                list.push_back(point_json(r.x, r.y));
            }
            out_ << Json{{"a", pair.a()},
                         {"b", pair.b()},
                         {"d", d},
                         {"anchor", point_json(family.x0, family.y0)},
                         {"canonical", point_json(canonical.x, canonical.y)},
                         {"solutions", list}}
                        .dump(2)
                 << '\n';
            break;
        }
        case OutputFormat::Csv:
            write_csv_row(out_, {"x", "y"});
            for (const auto& r : solutions) {
                write_csv_row(out_, {std::to_string(r.x), std::to_string(r.y)});
            }
            break;
        default:
            out_ << "anchor x0=" << family.x0 << " y0=" << family.y0 << '\n';
            out_ << "family x=" << family.x0 << "-" << pair.b() << "k y=" << family.y0 << "+" << pair.a() << "k\n";
            out_ << "canonical x=" << canonical.x << " y=" << canonical.y << '\n';
            out_ << "solutions " << solutions.size() << '\n';
            for (const auto& r : solutions) {
                out_ << r.x << ' ' << r.y << '\n';
            }
        }
    }

private:
    const Invocation& inv_;
    std::ostream& out_;
};

/// Runs one command line. `args` excludes the program name. Returns the
/// process exit code: 0 ok, 2 validation, 3 overflow, 4 invariant violation.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Invocation inv;
    std::string format_text;

    CLI::App app{"Two-denominator Frobenius coin problem toolkit", "frobenius"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format_text, "Output format: text, csv or json (plot always writes SVG)")
        ->check(CLI::IsMember({"text", "csv", "json", "svg"}));
    app.add_flag("-v,--verbose", inv.verbose, "Print certificates and extra detail");

    struct Subcommand {
        const char* name;
        const char* help;
        std::vector<const char*> operands;
    };
    const std::vector<Subcommand> subcommands = {
        {"frobenius", "Frobenius number ab - a - b, or 'none'", {"a", "b"}},
        {"check", "Membership of d with witness or certificate", {"a", "b", "d"}},
        {"count", "Number of non-negative representations of d", {"a", "b", "d"}},
        {"gaps", "All positive integers without a representation", {"a", "b"}},
        {"table", "Solutions of ax + by = d for 1 <= d <= d_max", {"a", "b", "d_max"}},
        {"plot", "SVG of the lines ax + by = d for 1 <= d <= d_max", {"a", "b", "d_max"}},
        {"pick", "Pick's theorem audit of the Frobenius parallelogram", {"a", "b"}},
        {"chain", "Inductive chain of representations up to d_max", {"a", "b", "d_max"}},
        {"solve", "Anchor, canonical and non-negative solutions of ax + by = d", {"a", "b", "d"}},
    };

    std::string chosen;
    std::vector<std::vector<std::string>> slots(subcommands.size());
    for (std::size_t s = 0; s < subcommands.size(); ++s) {
        const Subcommand& info = subcommands[s];
        CLI::App* sub = app.add_subcommand(info.name, info.help);
        slots[s].resize(info.operands.size());
        for (std::size_t i = 0; i < info.operands.size(); ++i) {
            sub->add_option(info.operands[i], slots[s][i], "decimal integer")->required();
        }
        if (std::string(info.name) == "plot") {
            sub->add_option("--width", inv.width_px, "Width in pixels (>= 100)")->capture_default_str();
            sub->add_option("--height", inv.height_px, "Height in pixels (>= 100)")->capture_default_str();
        }
        sub->callback([&, s] {
            chosen = subcommands[s].name;
            inv.operands = slots[s];
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kValidation;
    }

    try {
        if (!format_text.empty()) {
            inv.format_given = true;
            inv.format = format_text == "csv"    ? OutputFormat::Csv
                         : format_text == "json" ? OutputFormat::Json
                         : format_text == "svg"  ? OutputFormat::Svg
                                                 : OutputFormat::Text;
        }
        if (chosen == "plot") {
            if (inv.format_given && inv.format != OutputFormat::Svg) {
                throw InvalidArgument("plot always writes SVG; --format " + format_text + " is not accepted");
            }
        } else if (inv.format == OutputFormat::Svg) {
            throw InvalidArgument("--format svg is only accepted by plot");
        }

        std::vector<Int> n;
        const auto& info = *std::find_if(subcommands.begin(), subcommands.end(), [&](const Subcommand& s) { return chosen == s.name; });
        for (std::size_t i = 0; i < info.operands.size(); ++i) {
            n.push_back(parse_decimal(info.operands[i], inv.operands.at(i)));
        }
        const CoinPair pair(n[0], n[1]);

        Commands commands(inv, out);
        if (chosen == "frobenius") {
            commands.frobenius(pair);
        } else if (chosen == "check") {
            commands.check(pair, n[2]);
        } else if (chosen == "count") {
            commands.count(pair, n[2]);
        } else if (chosen == "gaps") {
            commands.gaps(pair);
        } else if (chosen == "table") {
            commands.table(pair, n[2]);
        } else if (chosen == "plot") {
            commands.plot(pair, n[2]);
        } else if (chosen == "pick") {
            commands.pick(pair);
        } else if (chosen == "chain") {
            commands.chain(pair, n[2]);
        } else if (chosen == "solve") {
            commands.solve(pair, n[2]);
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        if (e.kind() == ErrorKind::Overflow) {
            return exit_code::kOverflow;
        }
        return e.is_invariant_violation() ? exit_code::kInvariant : exit_code::kValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUnexpected;
    }
    return exit_code::kOk;
}

}  // namespace frobenius::cli

#endif  // FROBENIUS_TOOLS_CLI_APP_HPP

#pragma once

// Test-only brute-force helpers. These deliberately avoid the library's
// arithmetic so that expected values come from an independent route.

#include <frobenius/diophantine.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brute {

using frobenius::Int;

/// Every coprime (a, b) with lo <= a < b <= hi.
inline std::vector<std::pair<Int, Int>> coprime_pairs(Int lo, Int hi)
{
    std::vector<std::pair<Int, Int>> out;
    for (Int a = lo; a <= hi; ++a) {
        for (Int b = a + 1; b <= hi; ++b) {
            if (std::gcd(a, b) == 1) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

/// Least-|x| (positive on tie) x with a*x == g (mod b), found by scanning.
inline std::pair<Int, Int> bezout_by_scan(Int a, Int b)
{
    const Int g = std::gcd(a, b);
    std::optional<Int> best;
    const Int reach = (b < 0 ? -b : b) + 1;
    for (Int x = -reach; x <= reach; ++x) {
        if ((g - a * x) % b != 0) {
            continue;
        }
        const auto key = [](Int v) { return std::pair<Int, Int>{v < 0 ? -v : v, -v}; };
        if (!best || key(x) < key(*best)) {
            best = x;
        }
    }
    return {*best, (g - a * *best) / b};
}

inline Int inverse_by_scan(Int a, Int m)
{
    for (Int t = 0; t < m; ++t) {
        if (((a % m + m) % m * t) % m == 1 % m) {
            return t;
        }
    }
    return -1;
}

/// All (x, y) with x, y >= 0 and a*x + b*y == d, ascending in x.
inline std::vector<std::pair<Int, Int>> nonneg_by_scan(Int a, Int b, Int d)
{
    std::vector<std::pair<Int, Int>> out;
    for (Int x = 0; a * x <= d; ++x) {
        if ((d - a * x) % b == 0) {
            out.emplace_back(x, (d - a * x) / b);
        }
    }
    return out;
}

/// Per-d multiset of representations, with an empty vector for impossible d.
using RowsByD = std::map<Int, std::vector<std::pair<Int, Int>>>;

/// Reads a transcription file: "x y d" lines, "- - d" for impossible rows,
/// '#' comments.
inline RowsByD read_table_transcription(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    RowsByD rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string x, y, d;
        fields >> x >> y >> d;
        auto& bucket = rows[std::stoll(d)];
        if (x != "-") {
            bucket.emplace_back(std::stoll(x), std::stoll(y));
        }
    }
    for (auto& [d, reps] : rows) {
        std::sort(reps.begin(), reps.end());
    }
    return rows;
}

/// Parses the CSV emitted by `table` into the same shape.
inline RowsByD rows_from_table_csv(const std::string& csv)
{
    RowsByD rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (line.back() == ',') {
            cells.emplace_back();
        }
        auto& bucket = rows[std::stoll(cells.at(2))];
        if (!cells.at(0).empty()) {
            bucket.emplace_back(std::stoll(cells[0]), std::stoll(cells[1]));
        }
    }
    for (auto& [d, reps] : rows) {
        std::sort(reps.begin(), reps.end());
    }
    return rows;
}

inline std::size_t count_occurrences(const std::string& haystack, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

/// Minimal XML well-formedness check: balanced, properly nested tags and a
/// single root element. Good enough for the SVG this project writes.
inline bool xml_well_formed(const std::string& doc, std::string* root_name = nullptr)
{
    std::vector<std::string> stack;
    int roots = 0;
    std::size_t i = 0;
    while ((i = doc.find('<', i)) != std::string::npos) {
        const auto close = doc.find('>', i);
        if (close == std::string::npos) {
            return false;
        }
        std::string tag = doc.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) {
            return false;
        }
        if (tag[0] == '?' || tag[0] == '!') {
            continue;
        }
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) {
                return false;
            }
            stack.pop_back();
            continue;
        }
        const bool self_closing = tag.back() == '/';
        const std::string name = tag.substr(0, tag.find_first_of(" /\t\n"));
        if (stack.empty()) {
            ++roots;
            if (root_name) {
                *root_name = name;
            }
        }
        if (!self_closing) {
            stack.push_back(name);
        }
    }
    return stack.empty() && roots == 1;
}

}  // namespace brute

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gudg {

// Fixed-point scale: one plane unit is 10^4 ticks.
inline constexpr std::int64_t kScale = 10000;

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Point2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr auto operator<=>(const Point2&, const Point2&) = default;
    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
};

constexpr std::int64_t dist2(Point2 a, Point2 b) {
    const std::int64_t dx = a.x - b.x;
    const std::int64_t dy = a.y - b.y;
    return dx * dx + dy * dy;
}

constexpr Point2 units(std::int64_t x, std::int64_t y) { return {x * kScale, y * kScale}; }

// Parses a decimal with at most 4 fractional digits into ticks.
inline std::int64_t parse_decimal(std::string_view s) {
    if (s.empty()) throw InputError("empty decimal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    std::int64_t whole = 0;
    std::size_t digits = 0;
    for (; i < s.size() && s[i] != '.'; ++i, ++digits) {
        if (s[i] < '0' || s[i] > '9') throw InputError("bad decimal '" + std::string(s) + "'");
        if (whole > 100000000000LL) throw InputError("decimal out of range '" + std::string(s) + "'");
        whole = whole * 10 + (s[i] - '0');
    }
    std::int64_t frac = 0;
    std::size_t fdigits = 0;
    if (i < s.size()) {
        ++i;
        for (; i < s.size(); ++i, ++fdigits) {
            if (s[i] < '0' || s[i] > '9') throw InputError("bad decimal '" + std::string(s) + "'");
            if (fdigits == 4) throw InputError("more than 4 fractional digits in '" + std::string(s) + "'");
            frac = frac * 10 + (s[i] - '0');
        }
    }
    if (digits + fdigits == 0) throw InputError("bad decimal '" + std::string(s) + "'");
    for (std::size_t k = fdigits; k < 4; ++k) frac *= 10;
    const std::int64_t v = whole * kScale + frac;
    return neg ? -v : v;
}

inline std::string format_decimal(std::int64_t ticks) {
    std::string out;
    if (ticks < 0) {
        out.push_back('-');
        ticks = -ticks;
    }
    out += std::to_string(ticks / kScale);
    std::int64_t frac = ticks % kScale;
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(0, 4 - f.size(), '0');
        while (f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view s, std::size_t line) {
    Int v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(line, "expected integer, got '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct Violation {
    std::string kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string kind, std::string detail) {
        violations.push_back({std::move(kind), std::move(detail)});
    }
    std::string str() const {
        std::ostringstream os;
        if (ok()) os << "ok\n";
        for (const auto& v : violations) os << v.kind << ": " << v.detail << '\n';
        return os.str();
    }
};

}  // namespace gudg

#include "radgps/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace radgps {

std::string truncate_decimals(double v, int decimals) {
    if (decimals < 0) throw std::invalid_argument("truncate_decimals: negative count");
    if (!std::isfinite(v)) return v != v ? "nan" : (v > 0 ? "inf" : "-inf");
    // Print with a generous surplus of exact digits, then cut. A double's
    // decimal expansion cannot carry 25 consecutive nines at this depth, so
    // the surplus printing never rounds across the cut point.
    const int surplus = decimals + 25;
    std::vector<char> buf(surplus + 400);
    std::snprintf(buf.data(), buf.size(), "%.*f", surplus, v);
    std::string s(buf.data());
    const auto dot = s.find('.');
    if (dot == std::string::npos) return s;
    if (decimals == 0) return s.substr(0, dot);
    return s.substr(0, dot + 1 + static_cast<std::size_t>(decimals));
}

std::string truncate_significant(double v, int digits) {
    if (digits < 1) throw std::invalid_argument("truncate_significant: need >= 1 digit");
    if (!std::isfinite(v)) return v != v ? "nan" : (v > 0 ? "inf" : "-inf");
    if (v == 0.0) {
        std::string s = "0";
        if (digits > 1) s += "." + std::string(static_cast<std::size_t>(digits - 1), '0');
        return s;
    }
    char ebuf[96];
    std::snprintf(ebuf, sizeof ebuf, "%.40e", v);
    const char* epos = nullptr;
    for (const char* c = ebuf; *c; ++c)
        if (*c == 'e' || *c == 'E') epos = c;
    const int exp10 = static_cast<int>(std::strtol(epos + 1, nullptr, 10));
    const int decimals = digits - 1 - exp10;
    if (decimals >= 0) return truncate_decimals(v, decimals);
    // Magnitude exceeds the significant window: zero out the excess integer
    // digits (truncation toward zero keeps the string prefix intact).
    std::string s = truncate_decimals(v, 0);
    for (std::size_t i = s.size() - static_cast<std::size_t>(-decimals); i < s.size(); ++i)
        s[i] = '0';
    return s;
}

int decimals_of(const std::string& printed) {
    const auto dot = printed.find('.');
    if (dot == std::string::npos) return 0;
    return static_cast<int>(printed.size() - dot - 1);
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace radgps

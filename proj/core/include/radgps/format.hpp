#pragma once

#include <string>

namespace radgps {

// Decimal representation of v cut (not rounded) after `decimals` fractional
// digits, the table convention used throughout this project: every printed
// digit is correct as far as it goes.
std::string truncate_decimals(double v, int decimals);

// Truncation to `digits` significant figures (plain fixed notation).
// Values of magnitude >= 10^digits keep their integer digits with the excess
// replaced by zeros; zero prints as "0." followed by digits-1 zeros.
std::string truncate_significant(double v, int digits);

// Number of digits after the decimal point in a printed literal
// ("2.46735982710" -> 11, "-7.375" -> 3, "42" -> 0).
int decimals_of(const std::string& printed);

// RFC-4180-style CSV field quoting (quotes the field only when needed).
std::string csv_field(const std::string& raw);

} // namespace radgps

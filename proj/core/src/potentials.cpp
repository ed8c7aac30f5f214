#include "radgps/potentials.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace radgps {

double evaluate(const PotentialSpec& p, double r) {
    if (!(r > 0.0)) throw std::domain_error("potential evaluated at r <= 0");
    return std::visit(
        [r](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PerturbedOscillator>) {
                const double r2 = r * r;
                const double ir2 = 1.0 / r2;
                return v.a * r2 + (v.b + v.c * ir2) * ir2 * ir2;
            } else if constexpr (std::is_same_v<T, PerturbedCoulomb>) {
                return -v.Z / r + v.g * r + v.lambda * r * r;
            } else if constexpr (std::is_same_v<T, Quartic>) {
                const double r2 = r * r;
                return r2 * r2;
            } else {
                double sum = 0.0;
                for (const auto& [coeff, power] : v.terms) sum += coeff * std::pow(r, power);
                return sum;
            }
        },
        p);
}

double effective(const PotentialSpec& p, int l, double r) {
    return evaluate(p, r) + 0.5 * l * (l + 1) / (r * r);
}

namespace {

struct Token {
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        out.push_back({s.substr(start, i - start), start});
    }
    return out;
}

// Decimal or exact-rational ("p/q") literal.
double parse_number(const std::string& text, std::size_t pos) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return v;
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        double n = std::stod(num, &used);
        if (used != num.size()) throw std::invalid_argument("bad numerator");
        double d = std::stod(den, &used);
        if (used != den.size()) throw std::invalid_argument("bad denominator");
        if (d == 0.0) throw std::invalid_argument("zero denominator");
        return n / d;
    } catch (const PotentialParseError&) {
        throw;
    } catch (const std::exception&) {
        throw PotentialParseError("invalid numeric literal '" + text + "'", pos);
    }
}

double require_param(const std::vector<Token>& tokens, const std::string& key,
                     const std::string& family) {
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        auto eq = t.text.find('=');
        if (eq == std::string::npos)
            throw PotentialParseError("expected key=value, got '" + t.text + "'", t.pos);
        if (t.text.substr(0, eq) == key)
            return parse_number(t.text.substr(eq + 1), t.pos + eq + 1);
    }
    throw PotentialParseError(family + " requires parameter '" + key + "'", 0);
}

void reject_unknown_keys(const std::vector<Token>& tokens,
                         std::initializer_list<const char*> keys) {
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        auto eq = t.text.find('=');
        std::string k = eq == std::string::npos ? t.text : t.text.substr(0, eq);
        if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; }))
            throw PotentialParseError("unknown parameter '" + k + "'", t.pos);
    }
}

void validate(const PotentialSpec& p) {
    if (const auto* o = std::get_if<PerturbedOscillator>(&p)) {
        if (!(o->a > 0.0)) throw std::invalid_argument("oscillator requires a > 0");
        if (!(o->c > 0.0)) throw std::invalid_argument("oscillator requires c > 0");
    } else if (const auto* c = std::get_if<PerturbedCoulomb>(&p)) {
        if (!(c->Z > 0.0)) throw std::invalid_argument("coulomb requires Z > 0");
        if (c->g < 0.0) throw std::invalid_argument("coulomb requires g >= 0");
        if (c->lambda < 0.0) throw std::invalid_argument("coulomb requires lambda >= 0");
    } else if (const auto* s = std::get_if<PowerSeries>(&p)) {
        if (s->terms.empty()) throw std::invalid_argument("series requires at least one term");
        int top = 0;
        double top_coeff = 0.0;
        for (const auto& [coeff, power] : s->terms)
            if (power > 0 && (top == 0 || power > top)) {
                top = power;
                top_coeff = coeff;
            } else if (power == top && power > 0) {
                top_coeff += coeff;
            }
        if (top > 0 && !(top_coeff > 0.0))
            throw std::invalid_argument(
                "series is not confining: highest positive power has non-positive coefficient");
    }
}

} // namespace

PotentialSpec parse_potential(const std::string& text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw PotentialParseError("empty potential descriptor", 0);
    const std::string& name = tokens[0].text;

    PotentialSpec spec;
    if (name == "oscillator") {
        reject_unknown_keys(tokens, {"a", "b", "c"});
        spec = PerturbedOscillator{require_param(tokens, "a", name),
                                   require_param(tokens, "b", name),
                                   require_param(tokens, "c", name)};
    } else if (name == "coulomb") {
        reject_unknown_keys(tokens, {"Z", "g", "lambda"});
        spec = PerturbedCoulomb{require_param(tokens, "Z", name),
                                require_param(tokens, "g", name),
                                require_param(tokens, "lambda", name)};
    } else if (name == "quartic") {
        if (tokens.size() > 1)
            throw PotentialParseError("quartic takes no parameters", tokens[1].pos);
        spec = Quartic{};
    } else if (name == "series") {
        if (tokens.size() != 2)
            throw PotentialParseError("series requires a single term list", tokens[0].pos);
        PowerSeries series;
        const std::string& list = tokens[1].text;
        const std::size_t base = tokens[1].pos;
        std::size_t start = 0;
        while (start <= list.size()) {
            std::size_t end = list.find(',', start);
            if (end == std::string::npos) end = list.size();
            std::string term = list.substr(start, end - start);
            auto colon = term.find(':');
            if (term.empty() || colon == std::string::npos)
                throw PotentialParseError("expected <coeff>:<power> term, got '" + term + "'",
                                          base + start);
            double coeff = parse_number(term.substr(0, colon), base + start);
            std::string ptext = term.substr(colon + 1);
            std::size_t used = 0;
            int power = 0;
            try {
                power = std::stoi(ptext, &used);
            } catch (const std::exception&) {
                used = std::string::npos;
            }
            if (used != ptext.size())
                throw PotentialParseError("invalid integer power '" + ptext + "'",
                                          base + start + colon + 1);
            series.terms.emplace_back(coeff, power);
            if (end == list.size()) break;
            start = end + 1;
        }
        spec = std::move(series);
    } else {
        throw PotentialParseError("unknown potential family '" + name + "'", tokens[0].pos);
    }
    validate(spec);
    return spec;
}

namespace {
// Shortest decimal string that round-trips the double (e.g. 0.1, not
// 0.10000000000000001).
std::string shortest(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}
} // namespace

std::string describe(const PotentialSpec& p) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PerturbedOscillator>) {
                os << "oscillator a=" << shortest(v.a) << " b=" << shortest(v.b)
                   << " c=" << shortest(v.c);
            } else if constexpr (std::is_same_v<T, PerturbedCoulomb>) {
                os << "coulomb Z=" << shortest(v.Z) << " g=" << shortest(v.g)
                   << " lambda=" << shortest(v.lambda);
            } else if constexpr (std::is_same_v<T, Quartic>) {
                os << "quartic";
            } else {
                os << "series ";
                for (std::size_t i = 0; i < v.terms.size(); ++i) {
                    if (i) os << ',';
                    os << shortest(v.terms[i].first) << ':' << v.terms[i].second;
                }
            }
        },
        p);
    return os.str();
}

double sextic_core_strength(const PotentialSpec& p) {
    if (const auto* o = std::get_if<PerturbedOscillator>(&p)) return o->c;
    if (const auto* s = std::get_if<PowerSeries>(&p)) {
        double c = 0.0;
        for (const auto& [coeff, power] : s->terms)
            if (power == -6) c += coeff;
        return c > 0.0 ? c : 0.0;
    }
    return 0.0;
}

double coulomb_strength(const PotentialSpec& p) {
    if (const auto* c = std::get_if<PerturbedCoulomb>(&p)) return c->Z;
    if (const auto* s = std::get_if<PowerSeries>(&p)) {
        double z = 0.0;
        for (const auto& [coeff, power] : s->terms)
            if (power == -1) z -= coeff;
        return z;
    }
    return 0.0;
}

} // namespace radgps

#include "eqbobw/rational.hpp"

#include "eqbobw/errors.hpp"

#include <cctype>

namespace eqbobw {

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer floor(const Rational& q) {
    Integer num = numerator_of(q);
    Integer den = denominator_of(q);
    Integer quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) {
        quot -= 1;
    }
    return quot;
}

Integer ceil(const Rational& q) { return -floor(-q); }

bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

std::string to_fraction_string(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num_text = body.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1")
                                                                : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw InputError("malformed fraction: '" + std::string(text) + "'");
    }
    const Integer num{std::string(num_text)};
    const Integer den{std::string(den_text)};
    if (den == 0) {
        throw InputError("zero denominator in fraction: '" + std::string(text) + "'");
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

std::vector<Rational> to_rationals(const std::vector<std::int64_t>& values) {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (auto v : values) {
        out.emplace_back(v);
    }
    return out;
}

}  // namespace eqbobw

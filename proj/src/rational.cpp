#include "qbetti/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qbetti
{

namespace
{

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    if (text.empty())
        throw std::invalid_argument("empty integer in rational '" + std::string(whole) + "'");

    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-')
    {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size())
        throw std::invalid_argument("sign without digits in rational '" + std::string(whole) + "'");

    BigInt value = 0;
    for (; pos < text.size(); ++pos)
    {
        char const ch = text[pos];
        if (ch == '.' || ch == 'e' || ch == 'E')
            throw std::invalid_argument("floating-point literal not allowed: '" + std::string(whole) + "'");
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad character in rational '" + std::string(whole) + "'");
        value = value * 10 + (ch - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view const whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto const slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, whole));

    BigInt const num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
        throw std::invalid_argument("signed denominator in rational '" + std::string(whole) + "'");
    BigInt const den = parse_integer(den_text, whole);
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational '" + std::string(whole) + "'");
    return Rational(num, den);
}

std::string to_fraction_string(Rational const& value)
{
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal_string(BigInt const& value)
{
    return value.str();
}

BigInt floor_of(Rational const& value)
{
    BigInt const num = numerator(value);
    BigInt const den = denominator(value);
    BigInt q = num / den; // truncates toward zero
    if (num < 0 && q * den != num)
        q -= 1;
    return q;
}

BigInt ceil_of(Rational const& value)
{
    return -floor_of(-value);
}

double to_double(Rational const& value)
{
    return value.convert_to<double>();
}

} // namespace qbetti

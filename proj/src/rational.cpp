#include "ipath/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipath {

std::string to_string(Int value) {
    if (value == 0) {
        return "0";
    }
    bool negative = value < 0;
    // Work with the negative magnitude so the minimum value does not overflow.
    Int rest = negative ? value : -value;
    std::string digits;
    while (rest != 0) {
        int digit = static_cast<int>(-(rest % 10));
        digits.push_back(static_cast<char>('0' + digit));
        rest /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string to_string(const Rational& value) {
    return to_string(value.numerator()) + "/" + to_string(value.denominator());
}

bool is_integer(const Rational& value) {
    return value.denominator() == 1;
}

std::int64_t to_int64(const Rational& value) {
    if (!is_integer(value)) {
        throw std::domain_error("rational value is not an integer: " + to_string(value));
    }
    Int num = value.numerator();
    if (num > INT64_MAX || num < INT64_MIN) {
        throw std::overflow_error("rational value does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(num);
}

} // namespace ipath

#ifndef IPATH_RATIONAL_HPP
#define IPATH_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ipath {

// 128-bit numerators keep sums of clone weights exact: denominators stay
// bounded by the lcm of the clone counts in a path.
using Int = __int128;
using Rational = boost::rational<Int>;

std::string to_string(Int value);

// "num/den" with den > 0.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Requires an integer value that fits in 64 bits.
std::int64_t to_int64(const Rational& value);

} // namespace ipath

#endif

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace opforge {

/// Arbitrary-precision rational backed by GMP. Expression templates are off
/// so the type behaves as a plain value inside Eigen expressions.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses "p" or "p/q" (optional leading sign) into a reduced rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// "3/2", "-1", "0". Always reduced.
std::string format_rat(const Rat& r);

}  // namespace opforge

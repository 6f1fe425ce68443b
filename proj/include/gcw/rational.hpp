#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gcw {

/// Exact rational coefficients. Arbitrary precision: the identities this
/// library checks are exact, and intermediate coefficients (matrix inverses,
/// randomized products) must never silently overflow. Expression templates
/// are off so values behave like ordinary scalars.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

std::string to_string(const Rat& q);

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

using RatMatrix = std::vector<std::vector<Rat>>;

/// Gauss-Jordan inverse. Returns nullopt when the matrix is singular.
std::optional<RatMatrix> invert(const RatMatrix& m);

} // namespace gcw

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mgx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed or out-of-domain input (CLI exit code 2).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A computation exceeded its node/time budget (CLI exit code 3).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

// Index of the unordered pair {u,v}, u < v, in lexicographic order
// (0,1),(0,2),...,(0,n-1),(1,2),...
inline std::size_t pair_index(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 +
           static_cast<std::size_t>(v - u - 1);
}

inline double rational_to_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace mgx

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace seqvote {

// Voter weights and scores. Arbitrary precision: the hardness generators
// produce weights with hundreds of bits.
using Big = boost::multiprecision::cpp_int;

inline std::string to_string(const Big& v) { return v.str(); }

}  // namespace seqvote

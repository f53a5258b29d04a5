#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace repgrowth {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact conversion from the 128 bit accumulators used in hot loops.
inline BigInt to_bigint(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out |= static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

}  // namespace repgrowth

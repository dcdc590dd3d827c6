#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace subdens {

/// Exact counts. Blowup hosts push copy counts past 64 bits at modest n.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace subdens

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mzeta {

using BigInt = boost::multiprecision::cpp_int;

} // namespace mzeta

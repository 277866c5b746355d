#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace classprod {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

}  // namespace classprod

#ifndef ZONOFIT_TESTS_SUPPORT_HPP_
#define ZONOFIT_TESTS_SUPPORT_HPP_

#include "doctest.h"
#include "zonofit/common.hpp"

namespace doctest {
template <>
struct StringMaker<zonofit::ErrorCode> {
  static String convert(zonofit::ErrorCode c) { return zonofit::errorCodeName(c); }
};
}  // namespace doctest

#endif

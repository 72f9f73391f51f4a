#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace bootperc {

using Rational = boost::rational<std::int64_t>;

}  // namespace bootperc

#pragma once

#include <string>

#include "bfh/f2.hpp"
#include "bfh/structures.hpp"

namespace bfh {

// Generator x (type-A) paired with p (type-D) is named "x*p".
std::string pair_name(const std::string& x, const std::string& p);

ChainComplex box_AD(const TypeA& m, const TypeD& d);

// Pair a type-A module with the consumed (left) side of a DD bimodule. The
// emitted labels are the images of the right labels under phi, multiplied in
// path order; the output idempotent is the complement of the DD generator's
// right idempotent.
TypeD box_A_DD(const TypeA& m, const DDBimodule& p);

ChainComplex truncate(const TypeA& m, int idem);

}  // namespace bfh

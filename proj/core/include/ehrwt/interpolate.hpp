#pragma once

#include <span>
#include <utility>

#include "ehrwt/unipoly.hpp"

namespace ehrwt {

struct Sample {
  Rational x;
  Rational y;
};

// Unique polynomial of degree < samples.size() through all samples.
// Throws InputError on an empty list or repeated abscissae.
UniPoly lagrange_interpolate(std::span<const Sample> samples);

}  // namespace ehrwt

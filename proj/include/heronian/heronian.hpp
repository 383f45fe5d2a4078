#ifndef HERONIAN_HERONIAN_HPP
#define HERONIAN_HERONIAN_HPP

#include "amicability.hpp"
#include "census.hpp"
#include "error.hpp"
#include "families.hpp"
#include "numeric.hpp"
#include "parallelogram.hpp"
#include "serialize.hpp"
#include "svg.hpp"
#include "sweep.hpp"

#endif  // HERONIAN_HERONIAN_HPP

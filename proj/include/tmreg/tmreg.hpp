// Umbrella header.

#ifndef TMREG_TMREG_HPP_
#define TMREG_TMREG_HPP_

#include "decomposition.hpp"
#include "errors.hpp"
#include "kernel.hpp"
#include "membership.hpp"
#include "oracle.hpp"
#include "regularity.hpp"
#include "set_partition.hpp"
#include "transformation.hpp"

#endif  // TMREG_TMREG_HPP_

#ifndef MVSEP_MVSEP_HPP_
#define MVSEP_MVSEP_HPP_

#include "mvsep/algebra.hpp"
#include "mvsep/error.hpp"
#include "mvsep/fraction.hpp"
#include "mvsep/io.hpp"
#include "mvsep/lgroups.hpp"
#include "mvsep/pierce.hpp"
#include "mvsep/rational.hpp"
#include "mvsep/separability.hpp"
#include "mvsep/terms.hpp"
#include "mvsep/topology.hpp"

#endif  // MVSEP_MVSEP_HPP_

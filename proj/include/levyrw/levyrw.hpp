#ifndef LEVYRW_LEVYRW_HPP
#define LEVYRW_LEVYRW_HPP

#include "levyrw/averaging.hpp"
#include "levyrw/batch.hpp"
#include "levyrw/environment.hpp"
#include "levyrw/error.hpp"
#include "levyrw/estimators.hpp"
#include "levyrw/jump_density.hpp"
#include "levyrw/parallel.hpp"
#include "levyrw/pvp.hpp"
#include "levyrw/random.hpp"
#include "levyrw/report.hpp"
#include "levyrw/summation.hpp"
#include "levyrw/trajectory.hpp"

#endif  // LEVYRW_LEVYRW_HPP

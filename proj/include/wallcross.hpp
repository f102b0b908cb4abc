#ifndef WALLCROSS_HPP_
#define WALLCROSS_HPP_

#include "wallcross/partition.hpp"
#include "wallcross/farey.hpp"
#include "wallcross/crystal.hpp"
#include "wallcross/mullineux.hpp"
#include "wallcross/regular_order.hpp"
#include "wallcross/wallcross.hpp"
#include "wallcross/conjectures.hpp"
#include "wallcross/sweep.hpp"
#include "wallcross/report.hpp"

#endif  // WALLCROSS_HPP_

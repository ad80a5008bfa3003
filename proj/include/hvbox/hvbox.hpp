#ifndef HVBOX_HVBOX_HPP
#define HVBOX_HVBOX_HPP

#include "hvbox/bench.hpp"
#include "hvbox/decompose.hpp"
#include "hvbox/front.hpp"
#include "hvbox/geometry.hpp"
#include "hvbox/hvimprove.hpp"
#include "hvbox/io.hpp"
#include "hvbox/oracle.hpp"

#endif  // HVBOX_HVBOX_HPP

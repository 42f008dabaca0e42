#pragma once

#include "linkforms/enumerate.hpp"
#include "linkforms/io.hpp"

// Umbrella header: exact classification machinery for linking pairings and
// homogeneous quadratic forms on finite abelian groups, with the lens-space
// degree-one-map application layer.

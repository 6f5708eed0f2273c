#ifndef LIEC_LIEC_HPP
#define LIEC_LIEC_HPP

#include "liec/coloring.hpp"
#include "liec/constructive.hpp"
#include "liec/error.hpp"
#include "liec/family.hpp"
#include "liec/generators.hpp"
#include "liec/graph.hpp"
#include "liec/solver.hpp"
#include "liec/structure.hpp"
#include "liec/tree_coloring.hpp"

#endif  // LIEC_LIEC_HPP

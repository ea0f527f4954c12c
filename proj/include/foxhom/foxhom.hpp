// foxhom - knot group invariants via Fox calculus and homomorphism counting

#ifndef FOXHOM_FOXHOM_HPP_
#define FOXHOM_FOXHOM_HPP_

#include "error.hpp"
#include "finite_group.hpp"
#include "fox.hpp"
#include "hom_search.hpp"
#include "laurent.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "smith.hpp"
#include "word.hpp"

#endif  // FOXHOM_FOXHOM_HPP_

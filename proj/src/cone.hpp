#pragma once

#include "index_set.hpp"
#include "linalg.hpp"

namespace fano_toric {

// Polyhedral cone {y : c . y >= 0 for every constraint row c}, given by its
// primitive extreme rays.
struct Cone {
  IntMatrix constraints;
  IntMatrix rays;
  std::size_t ambient_rank = 0;

  // Constraint indices tight at ray r.
  IndexSet tight_set(std::size_t r) const;
};

// Extreme rays by the double description method, exact integer arithmetic.
// The cone must be pointed (constraints of full column rank); otherwise
// PreconditionError.
Cone cone_from_constraints(IntMatrix constraints);

}  // namespace fano_toric

#include "hilb/linalg.hpp"

// The subspace calculus is header-only (templates over the field); this
// translation unit pre-instantiates the common case to keep client builds
// lean.

namespace hilb {

template class Subspace<PrimeField>;
template class Subspace<RationalField>;

}  // namespace hilb

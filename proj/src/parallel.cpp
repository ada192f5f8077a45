#include "conelab/parallel.hpp"

#include <omp.h>

namespace conelab {

int max_threads() { return omp_get_max_threads(); }

}  // namespace conelab

#include "robinbox/parallel.hpp"

#include <omp.h>

namespace robinbox {

int max_threads() { return omp_get_max_threads(); }

}  // namespace robinbox

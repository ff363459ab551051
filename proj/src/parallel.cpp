#include "dsop/parallel.hpp"

#include <omp.h>

namespace dsop {

int max_threads() { return omp_get_max_threads(); }

}  // namespace dsop

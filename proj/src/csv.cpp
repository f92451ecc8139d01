#include "gsss/csv.hpp"

#include <cstdio>

namespace gsss {

std::string format_double17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace gsss

#ifndef HYBSQI_ERRORS_HPP
#define HYBSQI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hybsqi {

// Invalid user-facing configuration (unknown names, bad values). CLI exit 2.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver breakdown (NaN/Inf state, failed root find). CLI exit 3.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure while writing artifacts. CLI exit 4.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hybsqi

#endif

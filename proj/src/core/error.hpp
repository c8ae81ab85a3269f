#ifndef WIGCS_CORE_ERROR_HPP
#define WIGCS_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wigcs {

enum class ErrorCode {
  InvalidArgument,
  Dimension,
  NotHermitian,
  Tolerance,
  Diverged,
  RankDeficient,
  NoSparseSolution,
  Io,
  Internal,
};

// Single exception type for the whole core; the code maps 1:1 onto the
// statuses exposed at the C boundary. `detail` carries the iteration count
// for Diverged and the numerical rank for RankDeficient.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, long detail = -1)
      : std::runtime_error(msg), code_(code), detail_(detail) {}

  ErrorCode code() const { return code_; }
  long detail() const { return detail_; }

 private:
  ErrorCode code_;
  long detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg, long detail = -1) {
  throw Error(code, msg, detail);
}

}  // namespace wigcs

#endif

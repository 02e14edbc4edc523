#pragma once

#include <stdexcept>
#include <string>

namespace koshliakov {

enum class ErrorCode {
  pole,       // argument sits on (or within 1e-12 of) a pole
  domain,     // argument outside the supported region
  no_convergence,
  decay,      // decay model too weak to bound a semi-infinite tail
  limit,      // resource bound (table size) exceeded
  near_pole   // removable singularity approached too closely
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::pole: return "E_POLE";
    case ErrorCode::domain: return "E_DOMAIN";
    case ErrorCode::no_convergence: return "E_NOCONV";
    case ErrorCode::decay: return "E_DECAY";
    case ErrorCode::limit: return "E_LIMIT";
    case ErrorCode::near_pole: return "E_NEAR_POLE";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace koshliakov

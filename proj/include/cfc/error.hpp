#ifndef CFC_ERROR_HPP_
#define CFC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfc {

  enum class ErrorCode {
    InvalidRank,
    InvalidGenerator,
    NotReduced,
    ClosureTooLarge,
    DegreeMismatch,
    RankTooLarge,
    RankMismatch,
    NotCFC,
    NotMaximalBlock,
    ChunkAtBoundary,
    OutOfRange,
    PatternMismatch,
    ParseError,
    VerificationFailed,
  };

  std::string_view to_string(ErrorCode code);

  // Every domain failure raised by the library carries a stable code; the CLI
  // serializes it as {"error":{"code":...,"message":...}}.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

}  // namespace cfc

#endif  // CFC_ERROR_HPP_

#include "cfc/error.hpp"

namespace cfc {

  std::string_view to_string(ErrorCode code) {
    switch (code) {
      case ErrorCode::InvalidRank: return "InvalidRank";
      case ErrorCode::InvalidGenerator: return "InvalidGenerator";
      case ErrorCode::NotReduced: return "NotReduced";
      case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
      case ErrorCode::DegreeMismatch: return "DegreeMismatch";
      case ErrorCode::RankTooLarge: return "RankTooLarge";
      case ErrorCode::RankMismatch: return "RankMismatch";
      case ErrorCode::NotCFC: return "NotCFC";
      case ErrorCode::NotMaximalBlock: return "NotMaximalBlock";
      case ErrorCode::ChunkAtBoundary: return "ChunkAtBoundary";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::PatternMismatch: return "PatternMismatch";
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
  }

}  // namespace cfc

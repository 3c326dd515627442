#include "nulldecomp/error.hpp"

namespace nulldecomp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadChecksumChar: return "BadChecksumChar";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotUnicyclic: return "NotUnicyclic";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace nulldecomp

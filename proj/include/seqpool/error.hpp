#pragma once

#include <stdexcept>
#include <string>

namespace seqpool {

// Data/validation error. The CLI maps these to exit code 2.
class SeqpoolError : public std::runtime_error {
 public:
  explicit SeqpoolError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw SeqpoolError(msg); }

}  // namespace seqpool

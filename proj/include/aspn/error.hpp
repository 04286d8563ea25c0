#pragma once

#include <stdexcept>
#include <string>

namespace aspn {

// Every toolchain failure is an Error tagged with the pipeline stage it
// came from; the CLI prints "<stage>: <message>" and maps stages to exit
// codes.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& msg)
      : std::runtime_error(stage + ": " + msg), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct ParamError : Error {
  explicit ParamError(const std::string& msg) : Error("param", msg) {}
};

struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error("parse", "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

struct DirectiveError : Error {
  DirectiveError(int line, const std::string& msg)
      : Error("cppp", "line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

struct PlanError : Error {
  explicit PlanError(const std::string& msg) : Error("compile", msg) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error("format", msg) {}
};

struct CorruptError : Error {
  explicit CorruptError(const std::string& msg) : Error("corrupt", msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config", msg) {}
};

struct TraceError : Error {
  explicit TraceError(const std::string& msg) : Error("trace", msg) {}
};

}  // namespace aspn

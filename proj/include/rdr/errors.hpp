#ifndef RDR_ERRORS_HPP
#define RDR_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdr {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text in a corpus, prediction, or inventory stream.
// `line` is 1-based and refers to the input stream.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Semantically invalid data: duplicate IDs, labels outside the inventory,
// broken sample annotations, inconsistent paired corpora.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DuplicateIdError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownLabelError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A sample whose entity markers are missing, repeated, or overlapping.
class AnnotationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Unusable configuration, e.g. an inventory without inverse labels for
// pairing or too small for negative sampling.
class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Prediction IDs do not cover the target corpus exactly.
class CoverageError : public Error {
 public:
  CoverageError(std::vector<std::int64_t> missing, std::vector<std::int64_t> extra)
      : Error(describe(missing, extra)), missing_(std::move(missing)), extra_(std::move(extra)) {}
  const std::vector<std::int64_t>& missing() const { return missing_; }
  const std::vector<std::int64_t>& extra() const { return extra_; }

 private:
  static std::string describe(const std::vector<std::int64_t>& missing,
                              const std::vector<std::int64_t>& extra) {
    auto list = [](const std::vector<std::int64_t>& ids) {
      std::string out;
      const std::size_t shown = ids.size() < 20 ? ids.size() : 20;
      for (std::size_t i = 0; i < shown; ++i) {
        if (i) out += ", ";
        out += std::to_string(ids[i]);
      }
      if (ids.size() > shown) out += ", +" + std::to_string(ids.size() - shown) + " more";
      return out;
    };
    std::string msg = "prediction coverage mismatch";
    if (!missing.empty()) msg += "; missing IDs: " + list(missing);
    if (!extra.empty()) msg += "; extra IDs: " + list(extra);
    return msg;
  }

  std::vector<std::int64_t> missing_;
  std::vector<std::int64_t> extra_;
};

}  // namespace rdr

#endif  // RDR_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace fewmax {

// Error taxonomy shared by the library and the CLI. Each category maps to a
// stable process exit code so scripted callers can branch on failure class.
enum class ErrorCategory {
  config = 2,
  load = 3,
  schema = 4,
  data = 5,
  capacity = 6,
  parameter = 7,
  dimension = 8,
  checkpoint = 9,
  divergence = 10,
  state = 11,
  singularity = 12,
  label_coverage = 13,
  io = 14,
};

inline const char* error_category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::config: return "config";
    case ErrorCategory::load: return "load";
    case ErrorCategory::schema: return "schema";
    case ErrorCategory::data: return "data";
    case ErrorCategory::capacity: return "capacity";
    case ErrorCategory::parameter: return "parameter";
    case ErrorCategory::dimension: return "dimension";
    case ErrorCategory::checkpoint: return "checkpoint";
    case ErrorCategory::divergence: return "divergence";
    case ErrorCategory::state: return "state";
    case ErrorCategory::singularity: return "singularity";
    case ErrorCategory::label_coverage: return "label-coverage";
    case ErrorCategory::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(std::string(error_category_name(category)) + " error: " + message),
        category_(category) {}

  ErrorCategory category() const { return category_; }
  int exit_code() const { return static_cast<int>(category_); }

 private:
  ErrorCategory category_;
};

#define FEWMAX_DEFINE_ERROR(Name, Cat)                       \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& message)                \
        : Error(ErrorCategory::Cat, message) {}              \
  }

FEWMAX_DEFINE_ERROR(ConfigError, config);
FEWMAX_DEFINE_ERROR(LoadError, load);
FEWMAX_DEFINE_ERROR(SchemaError, schema);
FEWMAX_DEFINE_ERROR(DataError, data);
FEWMAX_DEFINE_ERROR(CapacityError, capacity);
FEWMAX_DEFINE_ERROR(ParameterError, parameter);
FEWMAX_DEFINE_ERROR(DimensionError, dimension);
FEWMAX_DEFINE_ERROR(CheckpointError, checkpoint);
FEWMAX_DEFINE_ERROR(DivergenceError, divergence);
FEWMAX_DEFINE_ERROR(StateError, state);
FEWMAX_DEFINE_ERROR(SingularityError, singularity);
FEWMAX_DEFINE_ERROR(LabelCoverageError, label_coverage);
FEWMAX_DEFINE_ERROR(IoError, io);

#undef FEWMAX_DEFINE_ERROR

}  // namespace fewmax

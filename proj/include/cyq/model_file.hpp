#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cyq/model.hpp"

namespace cyq {

// On-disk model description (one JSON object). service_times is required,
// everything else has a default; unknown keys are rejected.
struct ModelFile {
  std::vector<double> service_times;
  double think_time = 0;   // T(u), seconds
  int transactions = 1;    // n, transactions per session
  long host_index = 0;     // 1-based; 0 = default to K
  std::string label;
};

// Validated domain view of a model file. The workload carries think time and
// transactions; window/workstation counts come from the command line.
struct ParsedModel {
  ServiceProfile profile;
  WorkloadSpec workload;
  Eigen::Index host_index;  // resolved, 1-based
  std::string label;
};

// JSON text -> ModelFile. Throws ParseError (with a line number for syntax
// errors), MissingField, or UnknownField.
ModelFile read_model_file(const std::string& text);

// ModelFile -> JSON text; parse_model(emit_model(m)) reproduces m exactly.
std::string emit_model(const ModelFile& model);

ParsedModel parse_model(const std::string& text);
ParsedModel parse_model(const ModelFile& model);
ParsedModel load_model(const std::filesystem::path& path);

// Resolves a model argument against the bundled models directory: tries the
// name as a path, then with ".json", then inside models_dir (falling back to
// $CYQ_MODELS, then "models").
std::filesystem::path resolve_model_path(const std::string& name,
                                         const std::string& models_dir = "");

}  // namespace cyq

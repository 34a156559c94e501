#include "cyq/model_file.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cyq {

namespace {

long line_of_byte(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<long>(std::count(text.begin(), text.begin() + end, '\n'));
}

}  // namespace

ModelFile read_model_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_byte(text, e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError(1, "model must be a JSON object");

  ModelFile model;
  bool saw_service_times = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "service_times") {
      if (!value.is_array())
        throw ParseError(0, "service_times must be an array of numbers");
      for (const auto& entry : value) {
        if (!entry.is_number())
          throw ParseError(0, "service_times must be an array of numbers");
        model.service_times.push_back(entry.get<double>());
      }
      saw_service_times = true;
    } else if (key == "think_time") {
      if (!value.is_number())
        throw ParseError(0, "think_time must be a number");
      model.think_time = value.get<double>();
    } else if (key == "transactions") {
      if (!value.is_number_integer())
        throw ParseError(0, "transactions must be an integer");
      model.transactions = value.get<int>();
    } else if (key == "host_index") {
      if (!value.is_number_integer())
        throw ParseError(0, "host_index must be an integer");
      model.host_index = value.get<long>();
    } else if (key == "label") {
      if (!value.is_string()) throw ParseError(0, "label must be a string");
      model.label = value.get<std::string>();
    } else {
      throw UnknownField(key);
    }
  }
  if (!saw_service_times) throw MissingField("service_times");
  return model;
}

std::string emit_model(const ModelFile& model) {
  nlohmann::ordered_json doc;
  doc["label"] = model.label;
  doc["service_times"] = model.service_times;
  doc["think_time"] = model.think_time;
  doc["transactions"] = model.transactions;
  doc["host_index"] = model.host_index;
  return doc.dump(2) + "\n";
}

ParsedModel parse_model(const ModelFile& model) {
  ServiceProfile profile = validate_profile(model.service_times);
  WorkloadSpec workload;
  workload.think_time = model.think_time;
  workload.transactions = model.transactions;
  validate_workload(workload);

  Eigen::Index host = model.host_index == 0
                          ? profile.size()
                          : static_cast<Eigen::Index>(model.host_index);
  if (host < 1 || host > profile.size())
    throw IndexOutOfRange(host, profile.size());
  return ParsedModel{std::move(profile), workload, host, model.label};
}

ParsedModel parse_model(const std::string& text) {
  return parse_model(read_model_file(text));
}

ParsedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open model file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::filesystem::path resolve_model_path(const std::string& name,
                                         const std::string& models_dir) {
  namespace fs = std::filesystem;
  std::string dir = models_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("CYQ_MODELS")) dir = env;
  }
  if (dir.empty()) dir = "models";

  const fs::path candidates[] = {
      fs::path(name), fs::path(name + ".json"), fs::path(dir) / name,
      fs::path(dir) / (name + ".json")};
  for (const auto& candidate : candidates)
    if (fs::exists(candidate) && fs::is_regular_file(candidate))
      return candidate;
  throw ParseError(0, "cannot find model \"" + name + "\"");
}

}  // namespace cyq

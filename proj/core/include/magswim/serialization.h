#ifndef MAGSWIM_SERIALIZATION_H_
#define MAGSWIM_SERIALIZATION_H_

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magswim/geom.h"
#include "magswim/model.h"
#include "magswim/signal.h"
#include "magswim/stability.h"

namespace magswim {

using Json = nlohmann::json;

// Strict reader for one JSON object. Every accessor records the key it
// consumed; `finish()` rejects keys nobody asked for. Errors are ConfigError
// with the dotted path of the offending key.
class JsonObjectReader {
 public:
  JsonObjectReader(const Json& object, std::string path);

  bool has(const std::string& key) const;
  const Json& get(const std::string& key);  // required
  // Null when the key is absent or null.
  const Json* optional(const std::string& key);
  double number(const std::string& key);
  double number(const std::string& key, double fallback);
  int integer(const std::string& key, int fallback);
  bool boolean(const std::string& key, bool fallback);
  std::string string(const std::string& key, const std::string& fallback);
  std::string string(const std::string& key);
  std::vector<double> numbers(const std::string& key);
  std::vector<double> numbers(const std::string& key,
                              const std::vector<double>& fallback);
  std::string child_path(const std::string& key) const;
  const std::string& path() const { return path_; }

  void finish() const;

 private:
  const Json& object_;
  std::string path_;
  std::set<std::string> used_;
};

[[noreturn]] void config_error(const std::string& path,
                               const std::string& reason);

double json_number(const Json& value, const std::string& path);
std::vector<double> json_numbers(const Json& value, const std::string& path);

Json to_json(const SwimmerParams& params);
SwimmerParams swimmer_from_json(const Json& j, const std::string& path = "swimmer");

Json to_json(const ControlSignal& signal);
ControlSignal signal_from_json(const Json& j, const std::string& path = "signal");

Json to_json(const ShapeLoop& loop);
ShapeLoop loop_from_json(const Json& j, const std::string& path = "loop");

Json to_json(const GridBounds& bounds);
GridBounds bounds_from_json(const Json& j, const std::string& path = "bounds");

Json to_json(const StrobeResult& result);

}  // namespace magswim

#endif  // MAGSWIM_SERIALIZATION_H_

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gpscale/experiments.hpp"

namespace gpscale {

/// Flat `key = value` settings grouped under `[section]` headers. Keys are
/// stored fully qualified as "section.key". `#` starts a comment.
class ConfigFile {
 public:
  /// Every key the parser accepts, fully qualified.
  static const std::vector<std::string>& declared_keys();

  static ConfigFile parse(const std::string& text);
  static ConfigFile load(const std::filesystem::path& path);

  /// Applies `key=value`. `key` is either fully qualified or a bare name
  /// that matches exactly one declared key. Unknown or ambiguous keys throw
  /// ConfigError.
  void apply_override(const std::string& assignment);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  double get_real(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::vector<double> get_reals(const std::string& key) const;
  std::vector<int> get_ints(const std::string& key) const;

  void set(const std::string& key, const std::string& value);

 private:
  std::map<std::string, std::string> values_;
};

enum class SweepKind { mle, cubature };

/// ExperimentConfig from defaults for the sweep kind (the d = 1 or d = 2
/// maximum likelihood example, or the integration example) overlaid with
/// the file's settings.
ExperimentConfig experiment_config(const ConfigFile& file, SweepKind kind);

}  // namespace gpscale

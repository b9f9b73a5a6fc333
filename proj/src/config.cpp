#include "gpscale/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gpscale/error.hpp"

namespace gpscale {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(key + ": '" + text + "' is not a number");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(key + ": '" + text + "' is not an integer");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace

const std::vector<std::string>& ConfigFile::declared_keys() {
  static const std::vector<std::string> keys = {
      "kernel.family",         "kernel.nu",
      "kernel.lengthscale",    "kernel.sigma",
      "kernel.dim",            "function.eta",
      "function.lengthscale",  "function.coefficients",
      "function.centers",      "design.type",
      "design.n",              "design.n_min",
      "design.n_max",          "design.n_step",
      "analysis.geometry_resolution", "analysis.sup_error_resolution",
      "analysis.quadrature_tol",      "analysis.fit_window",
      "rates.nu_list",              "rates.eta_list",
  };
  return keys;
}

ConfigFile ConfigFile::parse(const std::string& text) {
  ConfigFile cfg;
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  const auto& keys = declared_keys();
  while (std::getline(is, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": key outside of any [section]");
    }
    const std::string key = section + "." + trim(line.substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    cfg.values_[key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse(ss.str());
}

void ConfigFile::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("--set expects KEY=VALUE, got '" + assignment + "'");
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  const auto& keys = declared_keys();
  if (key.find('.') != std::string::npos) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("--set: unknown key '" + key + "'");
    }
    values_[key] = value;
    return;
  }
  std::vector<std::string> matches;
  for (const auto& k : keys) {
    if (k.substr(k.find('.') + 1) == key) matches.push_back(k);
  }
  if (matches.empty()) throw ConfigError("--set: unknown key '" + key + "'");
  if (matches.size() > 1) {
    std::string list;
    for (const auto& m : matches) list += (list.empty() ? "" : ", ") + m;
    throw ConfigError("--set: '" + key + "' is ambiguous (" + list + ")");
  }
  values_[matches.front()] = value;
}

const std::string& ConfigFile::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing key '" + key + "'");
  return it->second;
}

double ConfigFile::get_real(const std::string& key) const { return parse_real(key, get(key)); }

int ConfigFile::get_int(const std::string& key) const { return parse_int(key, get(key)); }

std::vector<double> ConfigFile::get_reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(get(key))) out.push_back(parse_real(key, item));
  return out;
}

std::vector<int> ConfigFile::get_ints(const std::string& key) const {
  std::vector<int> out;
  for (const auto& item : split_list(get(key))) out.push_back(parse_int(key, item));
  return out;
}

void ConfigFile::set(const std::string& key, const std::string& value) { values_[key] = value; }

ExperimentConfig experiment_config(const ConfigFile& file, SweepKind kind) {
  const int dim = file.has("kernel.dim") ? file.get_int("kernel.dim") : 1;
  if (dim != 1 && dim != 2) throw ConfigError("kernel.dim must be 1 or 2");
  if (kind == SweepKind::cubature && dim != 1) {
    throw ConfigError("cubature sweeps are one-dimensional");
  }
  ExperimentConfig c = kind == SweepKind::cubature ? ExperimentConfig::cubature_1d(0.25)
                       : dim == 1                  ? ExperimentConfig::mle_1d(2.0)
                                                   : ExperimentConfig::mle_2d(2.5);

  KernelSpec& k = c.kernel;
  if (file.has("kernel.family")) {
    try {
      k.family = kernel_family_from_string(file.get("kernel.family"));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  k.dim = dim;
  if (file.has("kernel.nu")) k.nu = file.get_real("kernel.nu");
  if (file.has("kernel.lengthscale")) k.lengthscale = file.get_real("kernel.lengthscale");
  if (file.has("kernel.sigma")) k.sigma = file.get_real("kernel.sigma");

  FunctionExpansion& f = c.test_function;
  f.dim = dim;
  if (file.has("function.eta")) f.eta = file.get_real("function.eta");
  if (file.has("function.lengthscale")) f.lengthscale = file.get_real("function.lengthscale");
  if (file.has("function.coefficients")) f.coefficients = file.get_reals("function.coefficients");
  if (file.has("function.centers")) f.centers = file.get_reals("function.centers");

  if (file.has("design.type")) c.design = design_from_string(file.get("design.type"));
  const bool explicit_n = file.has("design.n");
  const bool ranged = file.has("design.n_min") || file.has("design.n_max") || file.has("design.n_step");
  if (explicit_n && ranged) throw ConfigError("give either design.n or design.n_min/n_max/n_step");
  if (explicit_n) c.n_range = file.get_ints("design.n");
  if (ranged) {
    const int lo = file.has("design.n_min") ? file.get_int("design.n_min") : c.n_range.front();
    const int hi = file.has("design.n_max") ? file.get_int("design.n_max") : c.n_range.back();
    const int step = file.has("design.n_step") ? file.get_int("design.n_step") : 1;
    if (step < 1) throw ConfigError("design.n_step must be positive");
    c.n_range.clear();
    for (int n = lo; n <= hi; n += step) c.n_range.push_back(n);
  }

  if (file.has("analysis.geometry_resolution")) {
    c.geometry_resolution = file.get_int("analysis.geometry_resolution");
  }
  if (file.has("analysis.sup_error_resolution")) {
    c.sup_error_resolution = file.get_int("analysis.sup_error_resolution");
  }
  if (file.has("analysis.quadrature_tol")) c.quadrature_tol = file.get_real("analysis.quadrature_tol");
  if (file.has("analysis.fit_window")) c.fit_window = file.get_real("analysis.fit_window");

  c.validate();
  return c;
}

}  // namespace gpscale

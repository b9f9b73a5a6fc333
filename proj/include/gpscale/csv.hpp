#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gpscale/experiments.hpp"

namespace gpscale {

/// Round-trip formatting: %.17g, with ".0" appended to integral values so
/// every real column reads back as a real.
std::string format_real(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footer;  // written as "# <line>"

  std::string str() const;
};

enum class CurveSchema { mle, cubature, geometry };

/// Header for a schema: mle -> N,sigma_ml,h,q,rho;
/// cubature -> N,Q,abs_err,sigma_ml,sqrt_V,R_bc,score; geometry -> N,h,q,rho.
std::vector<std::string> schema_header(CurveSchema schema);

/// Builds the table for records sorted by N. Throws Error for an empty list.
CsvTable curve_table(const std::vector<CurveRecord>& records, CurveSchema schema,
                     std::vector<std::string> footer = {});

/// Writes `content` to `path` through a temporary file in the same
/// directory followed by a rename. Throws Error on I/O failure.
void write_atomically(const std::filesystem::path& path, const std::string& content);

/// Writes the table to `destination`, or to `out` when no path is given.
void emit_csv(const CsvTable& table, const std::optional<std::filesystem::path>& destination,
              std::ostream& out);

}  // namespace gpscale

#include "gpscale/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "gpscale/error.hpp"

namespace gpscale {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (std::isfinite(v) && s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string CsvTable::str() const {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  for (const auto& f : footer) os << "# " << f << '\n';
  return os.str();
}

std::vector<std::string> schema_header(CurveSchema schema) {
  switch (schema) {
    case CurveSchema::mle:
      return {"N", "sigma_ml", "h", "q", "rho"};
    case CurveSchema::cubature:
      return {"N", "Q", "abs_err", "sigma_ml", "sqrt_V", "R_bc", "score"};
    case CurveSchema::geometry:
      return {"N", "h", "q", "rho"};
  }
  return {};
}

CsvTable curve_table(const std::vector<CurveRecord>& records, CurveSchema schema,
                     std::vector<std::string> footer) {
  if (records.empty()) throw Error("emit_csv: no records to write");
  CsvTable t;
  t.header = schema_header(schema);
  t.footer = std::move(footer);
  for (const CurveRecord& r : records) {
    std::vector<std::string> row{std::to_string(r.N)};
    switch (schema) {
      case CurveSchema::mle:
        for (double v : {r.sigma_ml, r.h, r.q, r.rho}) row.push_back(format_real(v));
        break;
      case CurveSchema::cubature:
        for (double v : {r.Q, r.abs_int_error, r.sigma_ml, r.sqrt_V, r.R_bc, r.score}) {
          row.push_back(format_real(v));
        }
        break;
      case CurveSchema::geometry:
        for (double v : {r.h, r.q, r.rho}) row.push_back(format_real(v));
        break;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open '" + tmp.string() + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

void emit_csv(const CsvTable& table, const std::optional<std::filesystem::path>& destination,
              std::ostream& out) {
  const std::string content = table.str();
  if (destination) {
    write_atomically(*destination, content);
  } else {
    out << content;
    out.flush();
    if (!out) throw Error("writing CSV to the output stream failed");
  }
}

}  // namespace gpscale

/** \file io.hpp
 *  \brief CSV input/output with round-trip-exact formatting.
 */
#pragma once

#include <string>
#include <vector>

namespace prandtl {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const;  ///< -1 when absent
};

CsvTable read_csv(const std::string& path);

/// Writes with "%.17g" so doubles survive a read-back bit-exactly.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

std::string format_double(double v);  ///< "%.17g"

}  // namespace prandtl

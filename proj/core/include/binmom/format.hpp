#pragma once

#include <string>
#include <vector>

namespace binmom {

// Floats are rendered at 12 significant digits ("%.12g") everywhere CSV
// output is produced, so identical runs diff byte-for-byte.
std::string format_double(double value);

// One CSV line: fields joined by commas, terminated by '\n'.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace binmom

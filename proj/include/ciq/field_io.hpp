#ifndef CIQ_FIELD_IO_HPP
#define CIQ_FIELD_IO_HPP

#include <string>
#include <variant>

#include "ciq/lattice.hpp"

namespace ciq {

// CIQF field file, all integers and doubles little-endian:
//   bytes 0-3   magic "CIQF"
//   bytes 4-7   u32 version, currently 1
//   bytes 8-11  u32 n_points (odd, >= 3)
//   bytes 12-19 f64 spacing (> 0)
//   bytes 20-23 u32 n_components (1 or 3)
//   bytes 24-   n_components * n_points^3 f64 values, component-major,
//               sites x1-fastest
// Reading rejects bad magic, unknown versions, invalid grids, non-finite
// values, truncated payloads and trailing bytes, reporting the byte
// offset of the defect.

void write_field_file(const std::string& path, const ScalarField& field);
void write_field_file(const std::string& path, const VectorField& field);

using FieldVariant = std::variant<ScalarField, VectorField>;
FieldVariant read_field_file(const std::string& path);

}  // namespace ciq

#endif  // CIQ_FIELD_IO_HPP

#pragma once

// FCIDUMP-style integral files. An optional namelist header
//   &FCI NORB=4, NELEC=2, ... &END
// is followed by records "value i j k l" with 1-based orbital indices:
// i j k l two-body (chemist order), i j 0 0 one-body, 0 0 0 0 constant.

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "superfast/linalg.hpp"

namespace superfast {

struct IntegralFile {
  std::size_t num_orbitals = 0;
  std::size_t num_electrons = 0;
  Matrix one_body;   // symmetric
  Tensor4 two_body;  // chemist order, 8-fold symmetric
  double constant = 0.0;
};

/// Without a header the orbital count is the largest index seen. Throws
/// ParseError (with line number) on malformed records or out-of-range
/// indices, ValidationError when two records disagree on a symmetric entry.
IntegralFile read_fcidump(std::istream& in);
IntegralFile read_fcidump(const std::filesystem::path& path);

/// Writes the header and one record per symmetry-unique entry with
/// |value| > threshold, at full double precision.
void write_fcidump(std::ostream& out, const IntegralFile& data, double threshold = 0.0);
void write_fcidump(const std::filesystem::path& path, const IntegralFile& data,
                   double threshold = 0.0);

}  // namespace superfast

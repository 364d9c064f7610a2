// Copyright 2026 The csgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSG_MATRIX_IO_H_
#define CSG_MATRIX_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "csg/types.h"

namespace csg {

// Two interchangeable encodings of a dense row-major matrix:
//
//   CSV     optional header line (detected when its first cell is not a
//           number), then one comma-separated row per line. Lines starting
//           with '#' are ignored.
//   binary  8-byte magic "CSGMAT01", uint64 rows, uint64 cols, then
//           rows * cols IEEE-754 doubles, all little-endian, row-major.
//
// Readers detect the encoding from the magic bytes.
inline constexpr char kMatrixMagic[8] = {'C', 'S', 'G', 'M', 'A', 'T', '0', '1'};

enum class MatrixFormat { kCsv, kBinary };

// Binary when the extension is ".bin", CSV otherwise.
MatrixFormat FormatForPath(const std::filesystem::path& path);

Matrix ReadMatrix(const std::filesystem::path& path);
Matrix ReadMatrixCsv(std::istream& in, const std::string& source_name);

void WriteMatrix(const std::filesystem::path& path, const Matrix& m);
void WriteMatrix(const std::filesystem::path& path, const Matrix& m,
                 MatrixFormat format);
// Header cells default to col_0, col_1, ...
void WriteMatrixCsv(std::ostream& out, const Matrix& m,
                    const std::vector<std::string>& header = {});

// Little-endian scalar helpers shared by the binary formats.
void WriteU32(std::ostream& out, std::uint32_t v);
void WriteU64(std::ostream& out, std::uint64_t v);
void WriteF64(std::ostream& out, double v);
std::uint32_t ReadU32(std::istream& in);
std::uint64_t ReadU64(std::istream& in);
double ReadF64(std::istream& in);

}  // namespace csg

#endif  // CSG_MATRIX_IO_H_

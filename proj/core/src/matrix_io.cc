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

#include "csg/matrix_io.h"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "csg/errors.h"

namespace csg {
namespace {

template <typename T>
void WriteLittle(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  out.write(bytes.data(), sizeof(T));
}

template <typename T>
T ReadLittle(std::istream& in) {
  std::array<char, sizeof(T)> bytes;
  if (!in.read(bytes.data(), sizeof(T))) {
    throw ValidationError("unexpected end of binary stream");
  }
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

bool ParseDouble(std::string_view cell, double& value) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
    cell.remove_prefix(1);
  }
  while (!cell.empty() &&
         (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) {
    cell.remove_suffix(1);
  }
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  return ec == std::errc() && ptr == cell.data() + cell.size();
}

std::vector<std::string_view> SplitCells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

Matrix ReadMatrixBinary(std::istream& in, const std::string& source_name) {
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMatrixMagic, 8) != 0) {
    throw ValidationError(source_name + ": bad binary matrix magic");
  }
  const std::uint64_t rows = ReadU64(in);
  const std::uint64_t cols = ReadU64(in);
  if (rows > (1ULL << 40) || cols > (1ULL << 32)) {
    throw ValidationError(source_name + ": implausible matrix dimensions");
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  if constexpr (std::endian::native == std::endian::little) {
    const std::streamsize bytes =
        static_cast<std::streamsize>(rows * cols * sizeof(double));
    if (!in.read(reinterpret_cast<char*>(m.data()), bytes)) {
      throw ValidationError(source_name + ": truncated matrix payload");
    }
  } else {
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = ReadF64(in);
  }
  return m;
}

}  // namespace

void WriteU32(std::ostream& out, std::uint32_t v) { WriteLittle(out, v); }
void WriteU64(std::ostream& out, std::uint64_t v) { WriteLittle(out, v); }
void WriteF64(std::ostream& out, double v) { WriteLittle(out, v); }
std::uint32_t ReadU32(std::istream& in) { return ReadLittle<std::uint32_t>(in); }
std::uint64_t ReadU64(std::istream& in) { return ReadLittle<std::uint64_t>(in); }
double ReadF64(std::istream& in) { return ReadLittle<double>(in); }

MatrixFormat FormatForPath(const std::filesystem::path& path) {
  return path.extension() == ".bin" ? MatrixFormat::kBinary
                                    : MatrixFormat::kCsv;
}

Matrix ReadMatrixCsv(std::istream& in, const std::string& source_name) {
  std::vector<double> values;
  std::string line;
  std::int64_t line_no = 0;
  Eigen::Index cols = -1;
  Eigen::Index rows = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (view.empty() || view.front() == '#') continue;
    auto cells = SplitCells(view);
    double probe = 0.0;
    if (first_content && !ParseDouble(cells[0], probe)) {
      // Header row.
      first_content = false;
      cols = static_cast<Eigen::Index>(cells.size());
      continue;
    }
    first_content = false;
    if (cols < 0) cols = static_cast<Eigen::Index>(cells.size());
    if (static_cast<Eigen::Index>(cells.size()) != cols) {
      throw ValidationError(source_name + ":" + std::to_string(line_no) +
                            ": expected " + std::to_string(cols) +
                            " columns, got " + std::to_string(cells.size()));
    }
    for (std::string_view cell : cells) {
      double v = 0.0;
      if (!ParseDouble(cell, v)) {
        throw ValidationError(source_name + ":" + std::to_string(line_no) +
                              ": cannot parse '" + std::string(cell) +
                              "' as a number");
      }
      values.push_back(v);
    }
    ++rows;
  }
  if (cols < 0) cols = 0;
  Matrix m(rows, cols);
  if (!values.empty()) std::memcpy(m.data(), values.data(), values.size() * sizeof(double));
  return m;
}

Matrix ReadMatrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open matrix file " + path.string());
  char magic[8] = {};
  in.read(magic, 8);
  const bool binary =
      in.gcount() == 8 && std::memcmp(magic, kMatrixMagic, 8) == 0;
  in.clear();
  in.seekg(0);
  if (binary) return ReadMatrixBinary(in, path.string());
  return ReadMatrixCsv(in, path.string());
}

void WriteMatrixCsv(std::ostream& out, const Matrix& m,
                    const std::vector<std::string>& header) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j) out << ',';
    if (static_cast<std::size_t>(j) < header.size()) {
      out << header[j];
    } else {
      out << "col_" << j;
    }
  }
  out << '\n';
  char buf[32];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), m(i, j));
      out.write(buf, ptr - buf);
    }
    out << '\n';
  }
}

void WriteMatrix(const std::filesystem::path& path, const Matrix& m,
                 MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  if (format == MatrixFormat::kCsv) {
    WriteMatrixCsv(out, m);
  } else {
    out.write(kMatrixMagic, 8);
    WriteU64(out, static_cast<std::uint64_t>(m.rows()));
    WriteU64(out, static_cast<std::uint64_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.size(); ++i) WriteF64(out, m.data()[i]);
  }
  if (!out) throw ValidationError("write failed for " + path.string());
}

void WriteMatrix(const std::filesystem::path& path, const Matrix& m) {
  WriteMatrix(path, m, FormatForPath(path));
}

}  // namespace csg

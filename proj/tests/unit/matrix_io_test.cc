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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "csg/errors.h"
#include "synthetic.h"

namespace csg {
namespace {

namespace fs = std::filesystem;

TEST(MatrixIo, CsvWithAndWithoutHeader) {
  std::istringstream with("a,b\n1,2\n# skipped\n3,4.5\n");
  const Matrix m = ReadMatrixCsv(with, "t");
  ASSERT_EQ(m.rows(), 2);
  EXPECT_EQ(m(1, 1), 4.5);
  std::istringstream without("1,2\n3,4\n");
  EXPECT_EQ(ReadMatrixCsv(without, "t").rows(), 2);
}

TEST(MatrixIo, CsvRejectsRaggedRows) {
  std::istringstream in("1,2\n3\n");
  EXPECT_THROW(ReadMatrixCsv(in, "t"), ValidationError);
  std::istringstream bad("1,2\n3,zz\n");
  EXPECT_THROW(ReadMatrixCsv(bad, "t"), ValidationError);
}

TEST(MatrixIo, BothEncodingsRoundTripExactly) {
  const Matrix m = testing::RandomMatrix(13, 4, 5) * 1e3;
  for (const char* name : {"csg_m.bin", "csg_m.csv"}) {
    const fs::path path = fs::temp_directory_path() / name;
    WriteMatrix(path, m);
    EXPECT_TRUE(ReadMatrix(path) == m) << name;
    fs::remove(path);
  }
}

TEST(MatrixIo, DetectsBinaryByMagicNotExtension) {
  const Matrix m = testing::RandomMatrix(3, 2, 1);
  const fs::path path = fs::temp_directory_path() / "csg_m_magic.csv";
  WriteMatrix(path, m, MatrixFormat::kBinary);
  EXPECT_TRUE(ReadMatrix(path) == m);
  fs::remove(path);
}

TEST(MatrixIo, TruncatedBinaryThrows) {
  const fs::path path = fs::temp_directory_path() / "csg_m_trunc.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out.write(kMatrixMagic, 8);
    WriteU64(out, 4);
    WriteU64(out, 4);
    WriteF64(out, 1.0);
  }
  EXPECT_THROW(ReadMatrix(path), ValidationError);
  fs::remove(path);
}

TEST(MatrixIo, LittleEndianScalars) {
  std::stringstream s;
  WriteU32(s, 0x01020304u);
  EXPECT_EQ(static_cast<unsigned char>(s.str()[0]), 0x04);
  WriteU64(s, 42);
  WriteF64(s, -0.25);
  EXPECT_EQ(ReadU32(s), 0x01020304u);
  EXPECT_EQ(ReadU64(s), 42u);
  EXPECT_EQ(ReadF64(s), -0.25);
}

}  // namespace
}  // namespace csg

#include "quadsg/reference_tables.hpp"

#include <array>
#include <vector>

namespace quadsg::tables {

std::span<const MuExceptionRow> mu_exception_rows() {
  static constexpr std::array<MuExceptionRow, 8> rows{{
      {29, 26, 13, 12, 374, 11},
      {45, 33, 15, 14, 663, 13},
      {47, 44, 16, 15, 749, 14},
      {50, 41, 16, 15, 791, 14},
      {55, 50, 17, 16, 930, 15},
      {67, 53, 18, 17, 1192, 16},
      {73, 63, 19, 18, 1377, 17},
      {79, 74, 20, 19, 1575, 18},
  }};
  return rows;
}

std::span<const EmbeddingEqRow> embedding_eq_rows() {
  static const std::vector<EmbeddingEqRow> rows{
      {10, 6, {{2, 2}, {3, 1}}},
      {13, 7, {{2, 2}, {4, 1}}},
      {19, 9, {{2, 2}, {6, 1}}},
      {22, 9, {{2, 1}, {3, 1}, {5, 1}}},
      {26, 10, {{2, 1}, {3, 1}, {6, 1}}},
      {34, 12, {{2, 1}, {3, 1}, {8, 1}}},
      {40, 12, {{2, 1}, {5, 1}, {6, 1}}},
      {43, 13, {{2, 1}, {4, 1}, {8, 1}}},
      {53, 15, {{2, 1}, {4, 1}, {10, 1}}},
      {58, 14, {{2, 2}, {3, 1}, {8, 1}}},
      {61, 15, {{2, 1}, {6, 1}, {8, 1}}},
      {64, 15, {{2, 2}, {3, 1}, {9, 1}}},
      {66, 16, {{3, 1}, {4, 1}, {10, 1}}},
      {70, 16, {{2, 2}, {3, 1}, {10, 1}}},
      {78, 18, {{3, 1}, {4, 1}, {12, 1}}},
      {82, 18, {{2, 2}, {3, 1}, {12, 1}}},
      {83, 17, {{2, 2}, {4, 1}, {10, 1}}},
      {90, 18, {{2, 2}, {4, 1}, {11, 1}}},
      {97, 19, {{2, 2}, {4, 1}, {12, 1}}},
      {104, 20, {{2, 2}, {4, 1}, {13, 1}}},
      {106, 21, {{3, 1}, {5, 1}, {14, 1}}},
      {107, 21, {{4, 2}, {14, 1}}},
      {118, 22, {{2, 2}, {4, 1}, {15, 1}}},
      {142, 24, {{2, 1}, {8, 1}, {15, 1}}},
      {181, 27, {{2, 2}, {6, 1}, {18, 1}}},
      {184, 27, {{2, 1}, {3, 1}, {5, 1}, {18, 1}}},
      {190, 28, {{2, 2}, {6, 1}, {19, 1}}},
      {193, 28, {{2, 1}, {3, 1}, {5, 1}, {19, 1}}},
      {226, 30, {{2, 1}, {3, 1}, {6, 1}, {20, 1}}},
      {236, 31, {{2, 1}, {3, 1}, {6, 1}, {21, 1}}},
  };
  return rows;
}

std::span<const ExceptionalGeneratorRow> exceptional_generator_rows() {
  static const std::vector<ExceptionalGeneratorRow> rows{
      {29, 11, std::nullopt},
      {29, 19, Decomposition{{1, 1}, {2, 1}, {8, 1}, {11, 1}}},
      {45, 13, std::nullopt},
      {45, 33, Decomposition{{1, 6}, {2, 2}, {5, 1}, {13, 2}}},
      {47, 14, std::nullopt},
      {47, 34, Decomposition{{1, 11}, {3, 1}, {14, 2}}},
      {50, 14, std::nullopt},
      {50, 39, Decomposition{{1, 1}, {2, 1}, {3, 1}, {5, 1}, {10, 1}, {14, 2}}},
      {55, 15, std::nullopt},
      {55, 26, Decomposition{{1, 15}, {15, 1}}},
      {55, 30, Decomposition{{1, 5}, {5, 1}, {10, 1}, {15, 1}}},
      {55, 41, Decomposition{{5, 1}, {15, 3}}},
      {67, 16, std::nullopt},
      {67, 52, Decomposition{{1, 10}, {8, 1}, {16, 3}}},
      {73, 17, std::nullopt},
      {73, 57, Decomposition{{1, 9}, {2, 2}, {3, 1}, {6, 1}, {17, 3}}},
      {79, 18, std::nullopt},
      {79, 62, Decomposition{{6, 1}, {18, 4}}},
  };
  return rows;
}

}  // namespace quadsg::tables

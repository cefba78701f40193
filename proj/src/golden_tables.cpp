#include "rsbf/harness.hpp"

// Reference values, transcribed verbatim. Kept apart from the code that
// recomputes them so a transcription slip shows up as a golden-vs-oracle
// disagreement rather than a silent change.

namespace rsbf {

const GoldenTable1& golden_table1() {
  static const GoldenTable1 table{{{
      {14, 28, 52, 100, 188, 360, 680, 1296},  // f_{0,0}
      {14, 24, 48, 88, 172, 320, 616, 1160},  // f_{0,1}
      {10, 20, 36, 72, 132, 256, 480, 920},  // f_{0,2}
      {6, 8, 20, 32, 68, 120, 240, 440},  // f_{0,3}
      {10, 24, 40, 84, 148, 296, 544, 1056},  // f_{1,1}
      {10, 16, 36, 60, 124, 224, 440, 816},  // f_{1,2}
      {2, 12, 12, 36, 52, 120, 200, 416},  // f_{1,3}
      {6, 16, 24, 52, 92, 184, 336, 656},  // f_{2,2}
      {6, 4, 16, 20, 52, 80, 176, 304},  // f_{2,3}
      {-2, 8, 0, 20, 12, 56, 64, 176},  // f_{3,3}
      {16, 20, 52, 84, 176, 312, 624, 1144},  // F_4
  }}};
  return table;
}

const GoldenTable2& golden_table2() {
  // Columns f_{0,0} .. f_{3,3} in row-major (i, j) order.
  static const GoldenTable2 table{{{
      {  4,   8,  12,  -8,   0,   0,   8, -12,   4,   8,   8,  -4,   0,  -4,   4,  -8},  // c = 2
      {  0,  -4,  -8,  12,  -4,  -4, -12,   8,   0,  -4,  -4,   8,  -4,   0,  -8,   4},  // c = 3
      { -4,  -8,   4,  -8,   0,   0,   8,  -4,  -4,  -8,   0,  -4,   0,   4,   4,   0},  // c = 6
      {  0,   4,  -8,   4,   4,   4,  -4,   8,   0,   4,  -4,   0,   4,   0,   0,   4},  // c = 7
      { -4,   0,  -4,   0,   0,   8,   0,   4,  -4,   0,   0,  -4,   0,   4,  -4,   8},  // c = 10
      {  0,  -4,   0,  -4,   4,  -4,   4,   0,   0,  -4,  -4,   0,   4,   0,   8,  -4},  // c = 11
      {  4,   0,   4,   0,   0,  -8,   0,  -4,   4,   0,   8,  -4,   0,  -4,  -4,   0},  // c = 14
      {  0,   4,   0,   4,  -4,   4,  -4,   0,   0,   4,  -4,   8,  -4,   0,   0,  -4},  // c = 15
      {  0,  -4,   0,  -4,   4,   4,   4,   0,   0,  -4,   4,  -8,   4,   8,   8,  -4},  // c = 18
      { -4,   0,  -4,   0,   0,   0,   0,   4,  -4,   0,  -8,   4,   0,  -4,  -4,   8},  // c = 19
      {  0,   4,   0,   4,  -4,  -4,  -4,   0,   0,   4,   4,   0,  -4,  -8,   0,  -4},  // c = 22
      {  4,   0,   4,   0,   0,   0,   0,  -4,   4,   0,   0,   4,   0,   4,  -4,   0},  // c = 23
      {  0,   4,   0,   4,  -4,  -4,  -4,   0,   0,   4,  -4,   8,  -4,   0,   0,  -4},  // c = 26
      {  4,   0,   4,   0,   0,   0,   0,  -4,   4,   0,   8,  -4,   0,  -4,  -4,   0},  // c = 27
      {  0,  -4,   0,  -4,   4,   4,   4,   0,   0,  -4,  -4,   0,   4,   0,   8,  -4},  // c = 30
      { -4,   0,  -4,   0,   0,   0,   0,   4,  -4,   0,   0,  -4,   0,   4,  -4,   8},  // c = 31
  }}};
  return table;
}

}  // namespace rsbf

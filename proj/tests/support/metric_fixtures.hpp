/*
 * Copyright 2026 The Jingo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Ten hand-constructed rankings with goldsets and hand-computed expected
// metric values. Derivations are spelled out next to each row; the values
// are frozen, not computed by the code under test.

#pragma once

#include <set>
#include <string>
#include <vector>

namespace fixtures {

struct MetricCase {
  std::vector<std::string> ranking;  // best first
  std::set<std::string> goldset;
  double expected_rr;
  double expected_ap;
  int expected_best_rank;  // 0 = miss
};

inline const std::vector<MetricCase>& metric_cases() {
  static const std::vector<MetricCase> cases = {
      // 1. gold at rank 1: rr = 1, ap = 1/1 / 1 = 1.
      {{"g"}, {"g"}, 1.0, 1.0, 1},
      // 2. gold at rank 2: rr = 1/2, ap = (1/2)/1 = 1/2.
      {{"x", "g"}, {"g"}, 0.5, 0.5, 2},
      // 3. gold at ranks 1 and 3: rr = 1, ap = (1/1 + 2/3)/2 = 5/6.
      {{"g1", "x", "g2"}, {"g1", "g2"}, 1.0, 5.0 / 6.0, 1},
      // 4. gold absent: rr = 0, ap = 0.
      {{"x", "y", "z"}, {"g"}, 0.0, 0.0, 0},
      // 5. both gold on top in either order: rr = 1, ap = (1/1 + 2/2)/2 = 1.
      {{"g2", "g1"}, {"g1", "g2"}, 1.0, 1.0, 1},
      // 6. gold at ranks 2 and 4: rr = 1/2, ap = (1/2 + 2/4)/2 = 1/2.
      {{"x", "g1", "y", "g2", "z"}, {"g1", "g2"}, 0.5, 0.5, 2},
      // 7. gold at rank 4: rr = 1/4, ap = (1/4)/1 = 1/4.
      {{"a", "b", "c", "g"}, {"g"}, 0.25, 0.25, 4},
      // 8. all three gold on top: rr = 1, ap = 1.
      {{"g1", "g2", "g3"}, {"g1", "g2", "g3"}, 1.0, 1.0, 1},
      // 9. gold {g1, g2, zzz} with zzz never retrieved: rr = 1/3,
      //    ap = (1/3 + 2/4)/3 = (5/6)/3 = 5/18.
      {{"x", "y", "g1", "g2", "w"}, {"g1", "g2", "zzz"}, 1.0 / 3.0, 5.0 / 18.0, 3},
      // 10. gold at ranks 2 and 4 of four: rr = 1/2, ap = (1/2 + 2/4)/2 = 1/2.
      {{"m", "g", "n", "g2"}, {"g", "g2"}, 0.5, 0.5, 2},
  };
  return cases;
}

// Best ranks [1,2,1,0,1,2,4,1,3,2]: Top@1 = 4/10, Top@3 = 8/10, Top@5 = 9/10.
inline constexpr double kExpectedTop1 = 0.4;
inline constexpr double kExpectedTop3 = 0.8;
inline constexpr double kExpectedTop5 = 0.9;

}  // namespace fixtures

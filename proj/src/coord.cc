// Copyright 2026 The MapForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mapforge/coord.h"

namespace mapforge {

std::string Coord::ToString() const {
  std::string out = "(";
  for (int a = 0; a < dim_; ++a) {
    if (a > 0) out += ", ";
    out += std::to_string(c_[a]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Coord& c) {
  return os << c.ToString();
}

}  // namespace mapforge

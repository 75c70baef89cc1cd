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

#ifndef MAPFORGE_ORACLE_H_
#define MAPFORGE_ORACLE_H_

#include <cstdint>
#include <vector>

#include "mapforge/coord.h"
#include "mapforge/domain.h"

namespace mapforge {

// First `count` coordinates of the domain, produced by walking the lattice
// in canonical order instead of evaluating any closed form: nested row and
// layer loops for the dense domains, level-by-level recursive subdivision
// for the fractals. Must agree with MapDomain pointwise.
std::vector<Coord> OracleEnumerate(DomainId domain, std::uint64_t count);

}  // namespace mapforge

#endif  // MAPFORGE_ORACLE_H_

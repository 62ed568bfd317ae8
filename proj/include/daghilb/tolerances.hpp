// Copyright 2026 The daghilb Authors
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

#pragma once

namespace daghilb {

/// Numerical stand-ins for exact equality.
///
/// `rank`  singular values below this count as zero.
/// `recon` reconstruction residual of a factorisation (a = p·u, a = u·s·v†).
/// `ortho` residual of u†u = I and of projector identities.
/// `eq`    morphism equality, relative to max(1, norms).
/// `con`   slack on ‖t‖ ≤ 1 when admitting a contraction.
struct Tolerances {
  double rank = 1e-9;
  double recon = 1e-8;
  double ortho = 1e-9;
  double eq = 1e-7;
  double con = 1e-9;
};

inline constexpr Tolerances kTol{};

}  // namespace daghilb

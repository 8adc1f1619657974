// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace rbmlab {

inline constexpr const char* version_string = "rbmlab 0.1.0";

}  // namespace rbmlab

// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace minsurf {

inline constexpr const char* kToolName = "minsurflab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace minsurf

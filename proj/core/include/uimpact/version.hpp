#pragma once

namespace uimpact {

inline constexpr const char* kVersion = "0.1.0";

}

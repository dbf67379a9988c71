#ifndef SUBCODE_VERSION_HPP
#define SUBCODE_VERSION_HPP

namespace subcode {

inline constexpr const char* kVersion = "0.1.0";

}

#endif

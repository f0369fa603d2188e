#ifndef ALPHAPART_VERSION_HPP
#define ALPHAPART_VERSION_HPP

namespace alphapart {

inline constexpr const char* kVersion = "0.1.0";

} // namespace alphapart

#endif

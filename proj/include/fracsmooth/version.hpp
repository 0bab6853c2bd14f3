#pragma once

namespace fracsmooth {

inline constexpr const char *kVersion = "1.0.0";
inline constexpr int kManifestSchema = 1;

} // namespace fracsmooth

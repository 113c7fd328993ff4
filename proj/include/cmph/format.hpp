#pragma once

#include <string>

namespace cmph {

// Locale-independent decimal formatting with 12 significant digits (the
// fixed width used by every CSV surface) and with full round-trip precision.
std::string fmt12(double v);
std::string fmt_full(double v);

} // namespace cmph

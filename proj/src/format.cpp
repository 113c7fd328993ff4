#include "cmph/format.hpp"

#include <charconv>

namespace cmph {
namespace {

std::string to_chars_general(double v, int precision)
{
    char buf[64];
    auto res = precision > 0
                   ? std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision)
                   : std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string fmt12(double v) { return to_chars_general(v, 12); }
std::string fmt_full(double v) { return to_chars_general(v, 0); }

} // namespace cmph

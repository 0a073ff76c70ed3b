#ifndef KICKCAST_TEXTIO_HPP
#define KICKCAST_TEXTIO_HPP

#include <charconv>
#include <string>
#include <string_view>

#include "kickcast/errors.hpp"

namespace kickcast {

/// Shortest decimal rendering that round-trips the exact double value.
inline void append_double(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

inline std::string format_double(double v) {
    std::string s;
    append_double(s, v);
    return s;
}

/// Parses a full token as a double; rejects partial parses and empty tokens.
/// Throws ParseError carrying the given line number.
inline double parse_double(std::string_view token, int line = 0) {
    double v = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ParseError("unparseable number '" + std::string(token) + "'", line);
    return v;
}

}  // namespace kickcast

#endif  // KICKCAST_TEXTIO_HPP

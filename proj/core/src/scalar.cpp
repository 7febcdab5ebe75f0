#include "mopoly/scalar.hpp"

#include "mopoly/errors.hpp"

#include <charconv>
#include <sstream>

namespace mopoly {

std::string_view to_string(ScalarKind kind) {
    switch (kind) {
        case ScalarKind::Double: return "double";
        case ScalarKind::Extended: return "extended";
        case ScalarKind::Rational: return "rational";
    }
    return "?";
}

ScalarKind parse_scalar_kind(std::string_view text) {
    if (text == "double") return ScalarKind::Double;
    if (text == "extended") return ScalarKind::Extended;
    if (text == "rational") return ScalarKind::Rational;
    raise(ErrorCode::ParameterOutOfRange, "unknown precision '" + std::string(text) + "'");
}

std::string format_scalar(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_scalar(const Extended& v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(std::numeric_limits<Extended>::digits10) << v;
    return os.str();
}

std::string format_scalar(const Rational& v) {
    return v.str();
}

}  // namespace mopoly

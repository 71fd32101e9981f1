#include "etso/halfint.hpp"
#include "etso/angular.hpp"

#include <charconv>

namespace etso {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw LabelError("not a half-integer: \"" + std::string(whole) + "\"");
    }
    return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_int(parse_int(text, text));
    int num = parse_int(text.substr(0, slash), text);
    int den = parse_int(text.substr(slash + 1), text);
    if (den == 1) return from_int(num);
    if (den != 2) throw LabelError("half-integers are written p/2: \"" + std::string(text) + "\"");
    return from_twice(num);
}

int HalfInt::as_int() const {
    if (!is_integer()) throw LabelError("expected an integer, got " + str());
    return twice / 2;
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

}  // namespace etso

#include "pathsep/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace pathsep {

namespace {

void write_indent(std::ostringstream& out, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
}

void write_value(std::ostringstream& out, const ordered_json& value, int depth) {
    switch (value.type()) {
        case nlohmann::detail::value_t::object: {
            if (value.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            std::size_t i = 0;
            for (auto it = value.begin(); it != value.end(); ++it, ++i) {
                write_indent(out, depth + 1);
                out << ordered_json(it.key()).dump() << ": ";
                write_value(out, it.value(), depth + 1);
                if (i + 1 < value.size()) out << ',';
                out << '\n';
            }
            write_indent(out, depth);
            out << '}';
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (value.empty()) {
                out << "[]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                write_indent(out, depth + 1);
                write_value(out, value[i], depth + 1);
                if (i + 1 < value.size()) out << ',';
                out << '\n';
            }
            write_indent(out, depth);
            out << ']';
            return;
        }
        case nlohmann::detail::value_t::number_float: {
            const double x = value.get<double>();
            if (!std::isfinite(x)) {
                out << (std::isnan(x) ? "\"nan\"" : (x > 0 ? "\"inf\"" : "\"-inf\""));
                return;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g", x);
            out << buf;
            return;
        }
        default:
            out << value.dump();
            return;
    }
}

}  // namespace

std::string dump_report(const ordered_json& value) {
    std::ostringstream out;
    write_value(out, value, 0);
    out << '\n';
    return out.str();
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace pathsep

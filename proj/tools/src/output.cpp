#include "output.hpp"

#include <mopoly/scalar.hpp>

#include <cmath>

namespace mopoly::cli {

namespace {

bool is_flat(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

void emit(std::ostream& os, const Json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (v.type()) {
        case Json::value_t::number_float: os << number_text(v.get<double>()); return;
        case Json::value_t::object: {
            if (v.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << inner << Json(it.key()).dump() << ": ";
                emit(os, it.value(), indent + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            if (is_flat(v)) {
                os << "[";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) os << ", ";
                    emit(os, v[i], indent + 1);
                }
                os << "]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ",\n";
                os << inner;
                emit(os, v[i], indent + 1);
            }
            os << "\n" << pad << "]";
            return;
        }
        default: os << v.dump(); return;
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

}  // namespace

std::string number_text(double v) {
    if (!std::isfinite(v)) return "null";
    return format_scalar(v);
}

void write_json(std::ostream& os, const Json& value) {
    emit(os, value, 0);
    os << "\n";
}

void write_csv(std::ostream& os, const Table& table) {
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) os << ",";
            os << csv_field(fields[i]);
        }
        os << "\n";
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
}

}  // namespace mopoly::cli

#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace mopoly::cli {

using Json = nlohmann::ordered_json;

// Indented JSON; floats with 17 significant digits, non-finite as null.
void write_json(std::ostream& os, const Json& value);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Comma separated, quoted only when a field needs it.
void write_csv(std::ostream& os, const Table& table);

std::string number_text(double v);

}  // namespace mopoly::cli

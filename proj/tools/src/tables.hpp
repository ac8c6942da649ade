#ifndef ISQ_TABLES_HPP
#define ISQ_TABLES_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace isqcli {

struct TableFile {
    std::string name; // without extension
    nlohmann::ordered_json json;
    std::string csv;
};

/// Deterministic regression tables over fixed parameter grids.
std::vector<TableFile> generate_tables();

} // namespace isqcli

#endif

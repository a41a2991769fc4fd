#pragma once

#include <filesystem>
#include <string>

#include "loopforge/group.hpp"

namespace loopforge {

// ".grp" text: either `format perm <degree>` followed by one generator per
// line in cycle notation, or `format table <order>` followed by the rows of
// the Cayley table. `#` starts a comment; `label <index> <text>` names an
// element.
GroupPtr parse_group_text(const std::string& text, const BuildOptions& options = {});
GroupPtr read_group_file(const std::filesystem::path& path, const BuildOptions& options = {});

// Writes the table form, including labels.
std::string format_group_table(const GroupTable& g);

std::string read_text_file(const std::filesystem::path& path);

// Whitespace-separated unsigned integers; throws ParseError.
std::vector<Elem> parse_index_list(const std::string& text);

}  // namespace loopforge

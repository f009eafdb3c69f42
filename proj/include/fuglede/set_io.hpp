#pragma once

// Plain-text set format:
//
//     p n
//     x y
//     x y
//     ...
//
// One element per line after the header. Blank lines and lines starting
// with '#' are ignored. Duplicate elements are rejected.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fuglede/group.hpp"

namespace fuglede {

GroupSet parse_set(std::istream& in, std::string_view source = "<input>",
                   std::uint64_t order_limit = kDefaultOrderLimit);
GroupSet parse_set(std::string_view text, std::string_view source = "<input>");
GroupSet read_set_file(const std::filesystem::path& path, std::uint64_t order_limit = kDefaultOrderLimit);

void write_set(std::ostream& out, const GroupSet& set);
std::string format_set(const GroupSet& set);

}  // namespace fuglede

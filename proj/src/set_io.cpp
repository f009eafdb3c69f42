#include "fuglede/set_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace fuglede {
namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Splits a line into exactly two unsigned integers.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(std::string_view line) {
  std::uint64_t values[2] = {0, 0};
  const char* cur = line.data();
  const char* end = line.data() + line.size();
  for (auto& value : values) {
    while (cur != end && (*cur == ' ' || *cur == '\t')) ++cur;
    const auto [ptr, ec] = std::from_chars(cur, end, value);
    if (ec != std::errc() || ptr == cur) return std::nullopt;
    cur = ptr;
  }
  while (cur != end && (*cur == ' ' || *cur == '\t')) ++cur;
  if (cur != end) return std::nullopt;
  return std::pair{values[0], values[1]};
}

}  // namespace

GroupSet parse_set(std::istream& in, std::string_view source_view, std::uint64_t order_limit) {
  const std::string source(source_view);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<GroupSet> set;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto pair = parse_pair(line);
    if (!pair) {
      throw ParseError(source, line_no, set ? "expected \"x y\"" : "expected header \"p n\"");
    }
    if (!set) {
      if (pair->second > 64) throw ParseError(source, line_no, "n is too large");
      try {
        set.emplace(GroupParams(pair->first, static_cast<unsigned>(pair->second), order_limit));
      } catch (const CapacityError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(source, line_no, e.what());
      }
      continue;
    }
    const Element e{pair->first, pair->second};
    if (!set->params().contains(e)) {
      throw ParseError(source, line_no, "element " + to_string(e) + " is outside the group");
    }
    if (set->contains(e)) {
      throw ParseError(source, line_no, "duplicate element " + to_string(e));
    }
    set->insert(e);
  }
  if (!set) throw ParseError(source, line_no == 0 ? 1 : line_no, "missing header \"p n\"");
  return *std::move(set);
}

GroupSet parse_set(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_set(in, source);
}

GroupSet read_set_file(const std::filesystem::path& path, std::uint64_t order_limit) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_set(in, path.string(), order_limit);
}

void write_set(std::ostream& out, const GroupSet& set) {
  out << set.params().p() << ' ' << set.params().n() << '\n';
  for (const Element& e : set.elements()) out << e.x << ' ' << e.y << '\n';
}

std::string format_set(const GroupSet& set) {
  std::ostringstream out;
  write_set(out, set);
  return out.str();
}

}  // namespace fuglede

#pragma once

#include <string>

namespace picard {

// DOT renderings with deterministic vertex and edge order.
std::string dot_lines27();  // 27 vertices, 135 incidence edges
std::string dot_hexagon();  // 6 vertices, 6 edges
std::string dot_ag23();     // bipartite 9 points + 12 lines, 36 edges

// false on any I/O failure
bool write_text_file(const std::string& path, const std::string& content);

}  // namespace picard

#pragma once

#include <string>

namespace dirspace {

// 17 significant decimal digits, the format shared by all numeric JSON and
// CSV output.
std::string format_double(double v);

std::string json_escape(const std::string& s);

// Write via a temp file and atomic rename; no partial files on failure.
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace dirspace

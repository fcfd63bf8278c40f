#ifndef WRDPM_IO_HPP
#define WRDPM_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace wrdpm {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

/// Parses a full token as a double; throws ParseError on trailing garbage.
double parse_number(std::string_view token, std::size_t line = 0);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Plain CSV matrix: one row per line, comma separated, no header.
std::string format_matrix_csv(const Eigen::MatrixXd& m);
Eigen::MatrixXd parse_matrix_csv(const std::string& text);

inline Eigen::MatrixXd load_matrix_csv(const std::filesystem::path& path) {
  return parse_matrix_csv(read_text_file(path));
}
inline void save_matrix_csv(const Eigen::MatrixXd& m, const std::filesystem::path& path) {
  write_text_file(path, format_matrix_csv(m));
}

}  // namespace wrdpm

#endif  // WRDPM_IO_HPP

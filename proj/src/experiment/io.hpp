#pragma once

#include <json.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace nlwave::experiment {

/// Comma-separated writer; numbers in scientific notation with 16 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header);

    CsvWriter& cell(double value);
    CsvWriter& cell(std::size_t value);
    CsvWriter& cell(std::complex<double> value); // two cells: re, im
    CsvWriter& cell(std::string_view text);
    void end_row();

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    void separator();

    std::filesystem::path path_;
    std::ofstream out_;
    bool row_started_ = false;
};

std::string format_number(double value);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Creates the directory (and parents), throwing IoError when that is impossible.
void ensure_directory(const std::filesystem::path& dir);

} // namespace nlwave::experiment
